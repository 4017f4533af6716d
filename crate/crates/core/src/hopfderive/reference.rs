//! Printed polynomials the chains are checked against, transcribed verbatim
//! into the polynomial text grammar.

/// Algebraic constraint among the shape-operator entries.
pub const CONSTRAINT: &str = "mu^2 - (alpha + gamma)*mu + alpha*gamma - beta^2";
/// `D(alpha)`.
pub const ALPHA_DERIVATIVE: &str = "beta*(alpha + gamma - 3*mu)";
/// `D(beta)`; also the right-hand side that must vanish once `beta` is
/// constant.
pub const BETA_DERIVATIVE: &str = "beta^2 + gamma^2 + mu*(alpha - 2*gamma) + 1";
/// `D(gamma) = SINGULAR / beta + beta * REGULAR`.
pub const GAMMA_DERIVATIVE_SINGULAR: &str = "(gamma - mu)*(gamma^2 - alpha*gamma - 1)";
pub const GAMMA_DERIVATIVE_REGULAR: &str = "2*gamma + mu";

/// First chain: `alpha + gamma + 3 mu = 0`.
pub mod case1 {
    /// The constraint with `mu` eliminated.
    pub const RELATION: &str = "4*alpha^2 - 9*beta^2 + 17*alpha*gamma + 4*gamma^2";
    /// Its derivative along `phi X`.
    pub const DERIVED: &str = "54*beta^4 - (49*alpha^2 + 209*alpha*gamma + 52*gamma^2 - 54)*beta^2 \
        - 32*gamma^4 - 44*alpha*gamma^3 + (59*alpha^2 + 32)*gamma^2 + (17*alpha^3 + 76*alpha)*gamma + 17*alpha^2";
    /// The linear factor split off the `beta`-eliminant.
    pub const FACTOR: &str = "alpha + 4*gamma";
    /// The cubic cofactor `f`.
    pub const CUBIC: &str = "100*gamma^3 + 300*alpha*gamma^2 + (300*alpha^2 - 126)*gamma + 100*alpha^3 - 369*alpha";
    /// The quartic printed as the derivative of `f` with `beta` eliminated.
    pub const QUARTIC: &str = "1000*gamma^4 + 2600*alpha*gamma^3 + (5000*alpha^2 + 700*alpha - 1113)*gamma^2 \
        + (4400*alpha^3 + 500*alpha^2 - 2055*alpha)*gamma + 1000*alpha^4 - 200*alpha^3 - 1842*alpha^2 - 450*alpha + 189";
}

/// Second chain: `alpha + gamma + mu = d`, `d != 0` constant.
pub mod case2 {
    pub const RELATION: &str = "2*alpha^2 - beta^2 - 3*alpha*d + d^2 + 5*alpha*gamma - 3*d*gamma + 2*gamma^2";
    pub const DERIVED: &str = "2*beta^4 - (18*gamma^2 + (35*alpha - 22*d)*gamma + 13*alpha^2 - 18*alpha*d + 6*d^2 - 2)*beta^2 \
        - 8*gamma^4 - (6*alpha - 10*d)*gamma^3 + (9*alpha^2 - 2*alpha*d - 3*d^2 + 8)*gamma^2 \
        + (5*alpha^3 - 8*alpha^2*d + (3*d^2 + 14)*alpha - 10*d)*gamma + 5*alpha^2 - 8*alpha*d + 3*d^2";
    pub const FACTOR: &str = "alpha - d + 2*gamma";
    /// The cubic cofactor `g`.
    pub const CUBIC: &str = "18*gamma^3 + (54*alpha - 33*d)*gamma^2 + (54*alpha^2 - 66*alpha*d + 20*d^2 - 6)*gamma \
        + 18*alpha^3 - 33*alpha^2*d + (20*d^2 - 9)*alpha - 4*d^3 + 5*d";
}

/// Hopf case in `CP^2`: `A = diag(-3H/2, lambda, delta)`.
pub mod hopf {
    /// Trace condition `trA = 3H` solved for the unknown pair.
    pub const TRACE: &str = "lambda + delta - 9/2*H";
    /// Eigenvalue relation as printed, moved to one side.
    pub const RELATION: &str = "6*lambda*H + (2*lambda - 3*H)*delta + 4";
}

use biharm_core::framecalc::{gauss_component, ruled_scenario, Frame, ShapeTemplate};
use biharm_core::multipoly::{poly, MultiPoly};
use proptest::prelude::*;

fn labels(n: usize) -> impl Strategy<Value = [usize; 4]> {
    [0..n, 0..n, 0..n, 0..n]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn curvature_symmetries(idx in labels(7), a in -3i64..=3, b in -3i64..=3) {
        let frame = Frame::ruled(4);
        let alpha = poly(&format!("{a}*alpha + {b}"));
        let t = ShapeTemplate::ruled(&frame, &alpha).unwrap();
        let l: Vec<&str> = idx.iter().map(|&i| frame.labels()[i].as_str()).collect();
        let r = |x: &str, y: &str, z: &str, w: &str| gauss_component(&frame, &t, [x, y, z, w]).unwrap();
        let base = r(l[0], l[1], l[2], l[3]);
        prop_assert_eq!(&base, &-r(l[1], l[0], l[2], l[3]));
        prop_assert_eq!(&base, &-r(l[0], l[1], l[3], l[2]));
        // pair symmetry
        prop_assert_eq!(&base, &r(l[2], l[3], l[0], l[1]));
    }
}

#[test]
fn ruled_verdict_does_not_depend_on_n() {
    let verdicts: Vec<_> = [2, 3, 5, 8].iter().map(|&n| ruled_scenario(n).unwrap()).collect();
    for c in &verdicts {
        assert!(c.is_minimal());
        assert_eq!(c.cleared, verdicts[0].cleared);
        assert_eq!(c.gauss_full, MultiPoly::zero());
    }
}

#[test]
fn template_from_text() {
    let t = ShapeTemplate::from_json(r#"[["-3/2*H","0","0"],["0","lambda","0"],["0","0","delta"]]"#).unwrap();
    assert_eq!(t, ShapeTemplate::hopf_plane());
}

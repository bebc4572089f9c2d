use proptest::prelude::*;
use tqft_core::latgauge::{random_gauge_function, LatticeGaugeField, LatticePath, Step};

fn loops_3x3() -> Vec<LatticePath> {
    let mut out = Vec::new();
    for x in 0..3 {
        for y in 0..3 {
            out.push(LatticePath::plaquette(vec![x, y], 0, 1));
            out.push(LatticePath::rectangle(vec![x, y], 0, 1, 2, 2));
            out.push(LatticePath::rectangle(vec![x, y], 1, 0, 2, 1));
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn wilson_loops_are_gauge_invariant(fs in any::<u64>(), gs in any::<u64>()) {
        let f = LatticeGaugeField::random(&[3, 3], fs).unwrap();
        let g = random_gauge_function(&[3, 3], gs).unwrap();
        let t = f.gauge_transform(&g).unwrap();
        for l in loops_3x3() {
            prop_assert!((f.wilson_loop(&l).unwrap() - t.wilson_loop(&l).unwrap()).abs() < 1e-12);
        }
        prop_assert!(t.links().iter().all(|u| u.norm_defect() < 1e-12));
    }

    #[test]
    fn holonomy_is_covariant(fs in any::<u64>(), gs in any::<u64>(), steps in prop::collection::vec((0usize..3, any::<bool>()), 0..12)) {
        let dims = [3, 2, 4];
        let f = LatticeGaugeField::random(&dims, fs).unwrap();
        let g = random_gauge_function(&dims, gs).unwrap();
        let path = LatticePath::new(vec![1, 0, 2], steps.into_iter().map(|(mu, fw)| Step { mu, forward: fw }).collect());
        let end = f.endpoint(&path).unwrap();
        let (x, y) = (f.site_index(&path.start).unwrap(), f.site_index(&end).unwrap());
        let expect = g[x] * f.holonomy(&path).unwrap() * g[y].dagger();
        prop_assert!(f.gauge_transform(&g).unwrap().holonomy(&path).unwrap().distance(&expect) < 1e-12);
    }

    #[test]
    fn pure_gauge_holonomy_depends_on_endpoints(gs in any::<u64>(), steps in prop::collection::vec((0usize..2, any::<bool>()), 0..16)) {
        let dims = [3, 3];
        let g = random_gauge_function(&dims, gs).unwrap();
        let f = LatticeGaugeField::pure_gauge(&dims, &g).unwrap();
        let path = LatticePath::new(vec![0, 1], steps.into_iter().map(|(mu, fw)| Step { mu, forward: fw }).collect());
        let end = f.endpoint(&path).unwrap();
        let expect = g[f.site_index(&path.start).unwrap()] * g[f.site_index(&end).unwrap()].dagger();
        prop_assert!(f.holonomy(&path).unwrap().distance(&expect) < 1e-12);
        prop_assert!(f.wilson_action(1.0).unwrap() < 1e-10);
    }
}

#[test]
fn loop_value_independent_of_start() {
    let f = LatticeGaugeField::random(&[3, 3], 0).unwrap();
    let l = LatticePath::rectangle(vec![1, 2], 0, 1, 2, 1);
    let w = f.wilson_loop(&l).unwrap();
    for k in 0..6 {
        assert!((f.wilson_loop(&l.rotated(f.dims(), k).unwrap()).unwrap() - w).abs() < 1e-12);
    }
}

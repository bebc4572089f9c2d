use num_rational::Rational64;
use proptest::prelude::*;
use tqft_core::anyon::{load_cft, su2k, vertex_correlator, FusionTable, IDENTITY, KNOWN_CFTS};
use tqft_core::C64;

fn mat_vec(m: &[Vec<u32>], v: &[u128]) -> Vec<u128> {
    // (M_a)_{bc} = N(a, b, c): new[c] = Σ_b v[b] N(a, b, c)
    (0..v.len()).map(|c| (0..v.len()).map(|b| v[b] * m[b][c] as u128).sum()).collect()
}

#[test]
fn bratteli_equals_matrix_power() {
    for name in KNOWN_CFTS {
        let t = load_cft(name).unwrap();
        for field in t.labels() {
            let m = t.fusion_matrix(field).unwrap();
            let mut v = vec![0u128; t.labels().len()];
            v[0] = 1;
            let diagram = t.bratteli(field, 10).unwrap();
            for level in 0..=10 {
                for (i, l) in t.labels().iter().enumerate() {
                    assert_eq!(diagram.count(level, l), v[i], "{name} {field} level {level} {l}");
                }
                v = mat_vec(&m, &v);
            }
        }
    }
}

#[test]
fn identity_fuses_trivially() {
    for name in KNOWN_CFTS {
        let t = load_cft(name).unwrap();
        assert_eq!(t.weight(IDENTITY).unwrap(), Rational64::from_integer(0));
        for x in t.labels() {
            assert_eq!(t.fuse(IDENTITY, x).unwrap(), vec![(x.clone(), 1)]);
            assert_eq!(t.fuse(x, IDENTITY).unwrap(), vec![(x.clone(), 1)]);
            for y in t.labels() {
                assert_eq!(t.fuse(x, y).unwrap(), t.fuse(y, x).unwrap());
            }
        }
    }
}

#[test]
fn z3_sigma_paths() {
    // 1 → σ1 → {σ2, ψ1} → {1, 2ε} → {3σ1, 2ψ2} → {5σ2, 3ψ1} → {5·1, 8ε}
    let t = load_cft("z3_parafermion").unwrap();
    assert_eq!(t.count_blocks("sigma1", 3, "1").unwrap(), 1);
    assert_eq!(t.count_blocks("sigma1", 3, "epsilon").unwrap(), 2);
    assert_eq!(t.count_blocks("sigma1", 6, "1").unwrap(), 5);
    assert_eq!(t.count_blocks("sigma1", 6, "epsilon").unwrap(), 8);
}

#[test]
fn custom_table_rejects_missing_conjugate() {
    let r = Rational64::new;
    let bad = FusionTable::new("bad", r(1, 1), &[("a", r(1, 2))], &[("a", "a", &[("a", 1)])]);
    assert!(bad.is_err());
}

#[test]
fn quantum_dimension_range() {
    for k in 2..=64 {
        let d = su2k(k).unwrap().d;
        assert!(d > 1.0 && d < 2.0);
    }
}

fn charges() -> impl Strategy<Value = Vec<Rational64>> {
    prop::collection::vec((-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational64::new(n, d)), 0..6)
}

proptest! {
    #[test]
    fn non_neutral_correlator_is_exactly_zero(a in charges(), extra in 1i64..5) {
        let mut alphas = a;
        let total: Rational64 = alphas.iter().sum();
        alphas.push(-total + Rational64::new(extra, 3));
        let zs: Vec<C64> = (0..alphas.len()).map(|i| C64::new(i as f64, 0.5 * i as f64)).collect();
        prop_assert_eq!(vertex_correlator(&alphas, &zs).unwrap(), C64::new(0.0, 0.0));
    }

    #[test]
    fn neutral_correlator_matches_log_sum(a in charges()) {
        let mut alphas = a;
        let total: Rational64 = alphas.iter().sum();
        alphas.push(-total);
        let zs: Vec<C64> = (0..alphas.len()).map(|i| C64::from_polar(1.0 + i as f64, 0.9 * i as f64)).collect();
        let got = vertex_correlator(&alphas, &zs).unwrap();
        let mut log = C64::new(0.0, 0.0);
        for i in 0..zs.len() {
            for j in i + 1..zs.len() {
                let e = alphas[i] * alphas[j];
                log += (zs[i] - zs[j]).ln() * (*e.numer() as f64 / *e.denom() as f64);
            }
        }
        let expect = log.exp();
        prop_assert!((got - expect).norm() <= 1e-9 * expect.norm().max(1.0));
    }

    #[test]
    fn neutrality_agrees_with_brute_force(idx in prop::collection::vec(0usize..6, 1..6)) {
        // enumerate every fusion outcome left to right, no set collapsing
        let t = load_cft("z3_parafermion").unwrap();
        let labels: Vec<&str> = idx.iter().map(|i| t.labels()[*i].as_str()).collect();
        let mut outcomes = vec![labels[0].to_string()];
        for f in &labels[1..] {
            outcomes = outcomes
                .iter()
                .flat_map(|o| t.fuse(o, f).unwrap().into_iter().map(|(c, _)| c))
                .collect();
        }
        prop_assert_eq!(t.neutral(&labels).unwrap(), outcomes.iter().any(|o| o == IDENTITY));
    }
}

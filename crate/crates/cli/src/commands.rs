use std::path::Path;

use serde_json::{json, Map, Value};
use tqft_core::anyon::{ising_monodromy_on, load_cft, su2k, MonodromyContour};
use tqft_core::cspartition::cs_partition;
use tqft_core::excalc::{betti_numbers, euler_characteristic, hodge_decompose, parse_complex};
use tqft_core::knot::{evaluate_at_level, jones, parse_pd, unnormalized_jones};
use tqft_core::latgauge::{random_gauge_function, Step};
use tqft_core::qmcore::{
    dyson_amplitude, free_propagator, path_integral_propagator, path_integral_reference, PathIntegralConfig,
    SpatialGrid, TimeAxis,
};
use tqft_core::{
    Cochain, DMatrix, HermitianOperator, HodgeMetric, KnotDiagram, LatticeGaugeField, LatticePath, PerturbationProblem,
    SimplicialComplex, C64,
};

use crate::json::{complex, rational};
use crate::{Command, Failure};

type Out = Result<Value, Failure>;

fn compute<E: std::fmt::Display>(e: E) -> Failure {
    Failure::compute(e)
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::compute(format!("{}: {e}", path.display())))
}

fn load_complex(path: &Path) -> Result<SimplicialComplex, Failure> {
    parse_complex(&read(path)?).map_err(|e| Failure::compute(format!("{}: {e}", path.display())))
}

fn load_metric(k: &SimplicialComplex, weights: Option<&Path>) -> Result<HodgeMetric, Failure> {
    let Some(path) = weights else {
        return Ok(HodgeMetric::unit(k));
    };
    let w: Vec<Vec<f64>> =
        serde_json::from_str(&read(path)?).map_err(|e| Failure::compute(format!("{}: {e}", path.display())))?;
    HodgeMetric::new(k, w).map_err(|e| Failure::compute(format!("{}: {e}", path.display())))
}

/// Explicit flag, else `TQFT_SEED`, else 0.
fn resolve_seed(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var("TQFT_SEED") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("TQFT_SEED must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(0),
    }
}

fn parse_dims(s: &str) -> Result<Vec<usize>, Failure> {
    s.split('x')
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| Failure::Usage(format!("--dims expects extents like 3x3, got {s:?}")))
}

fn parse_loop(shape: &str, at: Vec<usize>, mu: usize, nu: usize) -> Result<LatticePath, Failure> {
    let bad = || Failure::Usage(format!("--loop expects plaq, LxM or path:+0,+1,-0,-1, got {shape:?}"));
    if shape == "plaq" {
        return Ok(LatticePath::plaquette(at, mu, nu));
    }
    if let Some(steps) = shape.strip_prefix("path:") {
        let steps = steps
            .split(',')
            .map(|t| {
                let t = t.trim();
                let (forward, rest) = match t.as_bytes().first() {
                    Some(b'+') => (true, &t[1..]),
                    Some(b'-') => (false, &t[1..]),
                    _ => return Err(bad()),
                };
                let mu = rest.parse().map_err(|_| bad())?;
                Ok(Step { mu, forward })
            })
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(LatticePath::new(at, steps));
    }
    let (l, m) = shape.split_once('x').ok_or_else(bad)?;
    let (l, m) = (l.parse().map_err(|_| bad())?, m.parse().map_err(|_| bad())?);
    Ok(LatticePath::rectangle(at, mu, nu, l, m))
}

fn complex_matrix(m: &DMatrix<C64>) -> Value {
    Value::Array((0..m.nrows()).map(|r| Value::Array((0..m.ncols()).map(|c| complex(m[(r, c)])).collect())).collect())
}

pub fn run(cmd: Command) -> Out {
    match cmd {
        Command::Betti { complex: path } => {
            let k = load_complex(&path)?;
            Ok(json!({"betti": betti_numbers(&k), "euler": euler_characteristic(&k).map_err(compute)?}))
        }
        Command::Hodge {
            complex: path,
            degree,
            values,
            weights,
        } => {
            let k = load_complex(&path)?;
            let metric = load_metric(&k, weights.as_deref())?;
            let omega = Cochain::new(&k, degree, values).map_err(compute)?;
            let d = hodge_decompose(&k, &omega, &metric).map_err(compute)?;
            Ok(json!({
                "coexact": d.coexact.values,
                "degree": degree,
                "exact": d.exact.values,
                "harmonic": d.harmonic.values,
                "residual_norm": d.residual_norm,
            }))
        }
        Command::CsZ {
            complex: path,
            weights,
            spectra,
        } => {
            let k = load_complex(&path)?;
            let metric = load_metric(&k, weights.as_deref())?;
            let z = cs_partition(&k, &metric).map_err(compute)?;
            let mut out = json!({
                "dims": [z.harmonic_dimension_0, z.harmonic_dimension_1],
                "log_Z": z.log_z,
                "log_det_prime": [z.det0.log_det_prime, z.det1.log_det_prime],
            });
            if spectra {
                out["spectra"] = json!([z.det0.nonzero_eigenvalues, z.det1.nonzero_eigenvalues]);
            }
            Ok(out)
        }
        Command::Jones {
            pd,
            braid,
            strands,
            level,
            unnormalized,
        } => {
            let diagram = match (pd, braid) {
                (Some(path), _) => {
                    parse_pd(&read(&path)?, false).map_err(|e| Failure::compute(format!("{}: {e}", path.display())))?
                }
                (None, Some(word)) => {
                    KnotDiagram::from_braid(strands.unwrap_or_default(), &word).map_err(compute)?
                }
                (None, None) => return Err(Failure::Usage("give --pd or --braid".into())),
            };
            let poly = if unnormalized {
                unnormalized_jones(&diagram)
            } else {
                jones(&diagram)
            }
            .map_err(compute)?;
            let terms: Map<String, Value> = poly.terms().map(|(e, c)| (e.to_string(), json!(c))).collect();
            let mut out = json!({ "polynomial": terms });
            if let Some(k) = level {
                out["evaluation"] = complex(evaluate_at_level(&poly, k).map_err(compute)?.value);
            }
            Ok(out)
        }
        Command::Fuse { cft, a, b } => {
            let table = load_cft(&cft).map_err(compute)?;
            let channels: Vec<String> = table
                .fuse(&a, &b)
                .map_err(compute)?
                .into_iter()
                .flat_map(|(c, n)| std::iter::repeat_n(c, n as usize))
                .collect();
            Ok(json!({ "channels": channels }))
        }
        Command::Blocks {
            cft,
            field,
            n,
            target,
            diagram,
        } => {
            let table = load_cft(&cft).map_err(compute)?;
            table.index(&target).map_err(compute)?;
            let d = table.bratteli(&field, n).map_err(compute)?;
            let num = |c: u128| -> Result<Value, Failure> {
                u64::try_from(c)
                    .map(Value::from)
                    .map_err(|_| Failure::compute(format!("block count {c} does not fit in 64 bits")))
            };
            let mut out = json!({ "count": num(d.count(n, &target))? });
            if diagram {
                let levels = d
                    .levels
                    .iter()
                    .map(|lv| {
                        lv.iter()
                            .filter(|(_, c)| **c > 0)
                            .map(|(l, c)| Ok((l.clone(), num(*c)?)))
                            .collect::<Result<Map<_, _>, Failure>>()
                            .map(Value::Object)
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                out["levels"] = Value::Array(levels);
            }
            Ok(out)
        }
        Command::Su2k { k } => {
            let s = su2k(k).map_err(compute)?;
            Ok(json!({
                "allowed_spins": s.allowed_spins.iter().map(|r| rational(*r)).collect::<Vec<_>>(),
                "d": s.d,
                "k": s.k,
                "lambda1": complex(s.lambda1),
                "lambda2": complex(s.lambda2),
                "q": complex(s.q()),
            }))
        }
        Command::Monodromy { samples, radius, turns } => {
            let m = ising_monodromy_on(&MonodromyContour { radius, samples, turns }).map_err(compute)?;
            let rows: Vec<Value> = (0..2).map(|r| json!([complex(m[(r, 0)]), complex(m[(r, 1)])])).collect();
            Ok(json!({ "matrix": rows, "samples": samples, "turns": turns }))
        }
        Command::Wilson {
            dims,
            seed,
            field,
            loop_shape,
            at,
            mu,
            nu,
            gauge_seed,
            beta,
            out,
        } => {
            let mut f = match (field, dims) {
                (Some(path), _) => serde_json::from_str::<LatticeGaugeField>(&read(&path)?)
                    .map_err(|e| Failure::compute(format!("{}: {e}", path.display())))?,
                (None, Some(d)) => LatticeGaugeField::random(&parse_dims(&d)?, resolve_seed(seed)?).map_err(compute)?,
                (None, None) => return Err(Failure::Usage("give --dims or --field".into())),
            };
            if let Some(gs) = gauge_seed {
                let g = random_gauge_function(f.dims(), gs).map_err(compute)?;
                f = f.gauge_transform(&g).map_err(compute)?;
            }
            let at = at.unwrap_or_else(|| vec![0; f.dims().len()]);
            let path = parse_loop(&loop_shape, at, mu, nu)?;
            let mut result = json!({
                "dims": f.dims(),
                "wilson_loop": f.wilson_loop(&path).map_err(compute)?,
            });
            if let Some(b) = beta {
                result["action"] = json!(f.wilson_action(b).map_err(compute)?);
            }
            if let Some(p) = out {
                let text = serde_json::to_string(&f).map_err(compute)?;
                std::fs::write(&p, text).map_err(|e| Failure::compute(format!("{}: {e}", p.display())))?;
                result["out"] = json!(p.display().to_string());
            }
            Ok(result)
        }
        Command::Dyson {
            levels,
            omega,
            eps,
            order,
            t,
            points,
            from,
            to,
        } => {
            if levels < 2 {
                return Err(Failure::Usage("--levels must be at least 2".into()));
            }
            if from >= levels || to >= levels {
                return Err(Failure::Usage(format!("--from/--to must be below --levels {levels}")));
            }
            // E = diag(0, ω, 2ω, ...), H₁ = nearest-level hopping (σ₁ for two levels)
            let diag: Vec<f64> = (0..levels).map(|j| j as f64 * omega).collect();
            let e = HermitianOperator::from_real_diagonal(&diag).map_err(compute)?;
            let hop = DMatrix::from_fn(levels, levels, |r, c| {
                if r.abs_diff(c) == 1 {
                    C64::new(1.0, 0.0)
                } else {
                    C64::new(0.0, 0.0)
                }
            });
            let h1 = HermitianOperator::new(hop).map_err(compute)?;
            let p = PerturbationProblem::constant(e, h1, 0.0, t, points, eps).map_err(compute)?;
            let amp = dyson_amplitude(&p, order).map_err(compute)?;
            let exact = p.exact_amplitude().map_err(compute)?;
            Ok(json!({
                "amplitude": complex_matrix(&amp),
                "exact_probability": exact[(to, from)].norm_sqr(),
                "order": order,
                "probability": amp[(to, from)].norm_sqr(),
            }))
        }
        Command::Propagator {
            m,
            t,
            x,
            x0,
            slices,
            damping,
            euclidean,
            x_min,
            x_max,
            points,
        } => {
            let axis = if euclidean {
                TimeAxis::Euclidean
            } else {
                TimeAxis::Lorentzian { damping }
            };
            let config = PathIntegralConfig {
                slices,
                grid: SpatialGrid { x_min, x_max, points },
                axis,
            };
            let closed = free_propagator(m, x0, x, t, 1).map_err(compute)?;
            let reference = path_integral_reference(m, x0, x, t, axis).map_err(compute)?;
            let sliced = path_integral_propagator(m, x0, x, t, &config).map_err(compute)?;
            Ok(json!({
                "closed_form": complex(closed),
                "deviation": (sliced - reference).norm() / reference.norm(),
                "reference": complex(reference),
                "sliced": complex(sliced),
            }))
        }
    }
}

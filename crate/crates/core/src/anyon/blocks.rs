use std::f64::consts::PI;

use nalgebra::Matrix2;
use num_rational::Rational64;
use num_traits::Zero;

use super::AnyonError;
use crate::C64;

/// `⟨e^{iα₁φ}(z₁) … e^{iα_Nφ}(z_N)⟩ = ∏_{i<j} (z_i - z_j)^{α_i α_j}`, exactly
/// zero unless the charges sum to zero. Each factor uses the principal
/// branch; integer exponents are evaluated as exact powers.
pub fn vertex_correlator(alphas: &[Rational64], zs: &[C64]) -> Result<C64, AnyonError> {
    if alphas.len() != zs.len() {
        return Err(AnyonError::Domain(format!(
            "{} charges but {} points",
            alphas.len(),
            zs.len()
        )));
    }
    if !alphas.iter().sum::<Rational64>().is_zero() {
        return Ok(C64::new(0.0, 0.0));
    }
    let mut out = C64::new(1.0, 0.0);
    for i in 0..zs.len() {
        for j in i + 1..zs.len() {
            let dz = zs[i] - zs[j];
            if dz.norm() == 0.0 {
                return Err(AnyonError::Singular(format!("points {i} and {j} coincide")));
            }
            let e = alphas[i] * alphas[j];
            out *= if e.is_integer() {
                dz.powi(e.to_integer() as i32)
            } else {
                (dz.ln() * (*e.numer() as f64 / *e.denom() as f64)).exp()
            };
        }
    }
    Ok(out)
}

fn prefactor(z: C64) -> C64 {
    (z * (C64::new(1.0, 0.0) - z)).powf(-0.125)
}

/// The Ising blocks `F_±(z) = (z(1-z))^{-1/8} √(1 ± √(1-z))` of
/// `⟨σ(0)σ(z)σ(1)σ(w)⟩`, with the `w^{-1/8}` factor of the `w → ∞` limit
/// stripped. All roots are principal; `F_-` uses `1 - √(1-z) = z/(1 + √(1-z))`
/// so small `z` keeps full precision.
pub fn ising_four_point_blocks(z: C64, w_cutoff: f64) -> Result<(C64, C64), AnyonError> {
    if !(w_cutoff.is_finite() && w_cutoff > 0.0) {
        return Err(AnyonError::Domain(format!("w cutoff must be positive, got {w_cutoff}")));
    }
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(AnyonError::Domain("z must be finite".into()));
    }
    let one = C64::new(1.0, 0.0);
    if z == C64::zero() || z == one {
        return Err(AnyonError::BranchPoint(format!("z = {z}")));
    }
    let pre = prefactor(z);
    let s = (one - z).sqrt();
    Ok((pre * (one + s).sqrt(), pre * (z / (one + s)).sqrt()))
}

/// Circle around `z = 1` traversed clockwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonodromyContour {
    /// Must lie in `(0, 1)` so the circle winds around 1 but not 0.
    pub radius: f64,
    /// Steps per turn, at least 16.
    pub samples: usize,
    pub turns: u32,
}

impl Default for MonodromyContour {
    fn default() -> Self {
        MonodromyContour {
            radius: 0.5,
            samples: 256,
            turns: 1,
        }
    }
}

/// Monodromy of `(F_+, F_-)` once clockwise around `z = 1` with the default
/// contour and the given number of steps.
pub fn ising_monodromy(samples: usize) -> Result<Matrix2<C64>, AnyonError> {
    ising_monodromy_on(&MonodromyContour {
        samples,
        ..MonodromyContour::default()
    })
}

fn nearest(prev: C64, candidates: &[C64]) -> Result<C64, AnyonError> {
    let mut d: Vec<(f64, C64)> = candidates.iter().map(|c| ((c - prev).norm(), *c)).collect();
    d.sort_by(|a, b| a.0.total_cmp(&b.0));
    if d[0].0 >= 0.5 * d[1].0 {
        return Err(AnyonError::Continuation(
            "branch choice ambiguous between steps; use more samples".into(),
        ));
    }
    Ok(d[0].1)
}

/// Continue `(F_+, F_-)` along the contour, choosing at every step the root
/// branches closest to the previous values, and return `M` with
/// `F_continued = M F`.
pub fn ising_monodromy_on(contour: &MonodromyContour) -> Result<Matrix2<C64>, AnyonError> {
    let MonodromyContour { radius, samples, turns } = *contour;
    if !(radius > 0.0 && radius < 1.0) {
        return Err(AnyonError::Domain(format!("radius must lie in (0, 1), got {radius}")));
    }
    if samples < 16 {
        return Err(AnyonError::Continuation(format!(
            "{samples} steps per turn cannot track the branches; need at least 16"
        )));
    }
    if turns == 0 {
        return Err(AnyonError::Domain("at least one turn".into()));
    }
    let one = C64::new(1.0, 0.0);
    let eighth = C64::from_polar(1.0, PI / 4.0);
    // start off the real axis so no principal branch sits on its cut
    let phi0 = PI / 3.0;
    let quarter = samples / 4;
    let loop_steps = samples * turns as usize;
    let at = |j: usize| one + C64::from_polar(radius, phi0 - 2.0 * PI * j as f64 / samples as f64);

    let z0 = at(0);
    let mut pre = prefactor(z0);
    let mut s = (one - z0).sqrt();
    let mut up = (one + s).sqrt();
    let mut dn = (one - s).sqrt();
    let mut values = vec![(pre * up, pre * dn)];
    for j in 1..=loop_steps + quarter {
        let z = at(j);
        let p = prefactor(z);
        let roots: Vec<C64> = (0..8).map(|m| p * eighth.powi(m)).collect();
        pre = nearest(pre, &roots)?;
        let r = (one - z).sqrt();
        s = nearest(s, &[r, -r])?;
        let u = (one + s).sqrt();
        up = nearest(up, &[u, -u])?;
        let v = (one - s).sqrt();
        dn = nearest(dn, &[v, -v])?;
        values.push((pre * up, pre * dn));
    }

    // two points a quarter turn apart pin down the 2x2 matrix
    let basis = Matrix2::new(values[0].0, values[0].1, values[quarter].0, values[quarter].1);
    let det = basis.determinant();
    if det.norm() < 1e-12 * basis.norm() * basis.norm() {
        return Err(AnyonError::Continuation("basis values are degenerate".into()));
    }
    let inv = basis.try_inverse().ok_or_else(|| AnyonError::Continuation("singular basis".into()))?;
    let (ea, eb) = (values[loop_steps], values[loop_steps + quarter]);
    // row i of M solves [F(z_a); F(z_b)] m_i = [G_i(z_a); G_i(z_b)]
    let mut m = Matrix2::zeros();
    for (i, (ga, gb)) in [(ea.0, eb.0), (ea.1, eb.1)].into_iter().enumerate() {
        let row = inv * nalgebra::Vector2::new(ga, gb);
        m[(i, 0)] = row[0];
        m[(i, 1)] = row[1];
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn correlator_examples() {
        let r = Rational64::from_integer;
        let v = vertex_correlator(&[r(1), r(-1)], &[c(0.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert_eq!(v, c(-1.0, 0.0));
        let v = vertex_correlator(&[r(1), r(1)], &[c(0.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert_eq!(v, c(0.0, 0.0));
        assert_eq!(vertex_correlator(&[], &[]).unwrap(), c(1.0, 0.0));
        assert!(matches!(
            vertex_correlator(&[r(1), r(-1)], &[c(2.0, 0.0), c(2.0, 0.0)]),
            Err(AnyonError::Singular(_))
        ));
        assert!(vertex_correlator(&[r(1)], &[]).is_err());
    }

    #[test]
    fn correlator_fractional_charges() {
        let h = Rational64::new(1, 2);
        let zs = [c(0.0, 0.0), c(0.0, 2.0)];
        let v = vertex_correlator(&[h, -h], &zs).unwrap();
        // (-2i)^{-1/4}, principal
        let expect = (c(0.0, -2.0).ln() * -0.25).exp();
        assert!((v - expect).norm() < 1e-15);
    }

    #[test]
    fn blocks_at_half() {
        let (fp, fm) = ising_four_point_blocks(c(0.5, 0.0), 1.0).unwrap();
        let pre = 0.25f64.powf(-0.125);
        let s = 0.5f64.sqrt();
        assert!((fp - c(pre * (1.0 + s).sqrt(), 0.0)).norm() < 1e-14);
        assert!((fm - c(pre * (1.0 - s).sqrt(), 0.0)).norm() < 1e-14);
    }

    #[test]
    fn small_z_exponents() {
        let zs = [1e-3f64, 1e-4, 1e-5];
        let slope = |pick: fn((C64, C64)) -> C64| {
            let pts: Vec<(f64, f64)> = zs
                .iter()
                .map(|z| (z.ln(), pick(ising_four_point_blocks(c(*z, 0.0), 1.0).unwrap()).norm().ln()))
                .collect();
            (pts[2].1 - pts[0].1) / (pts[2].0 - pts[0].0)
        };
        assert!((slope(|b| b.0) + 0.125).abs() < 1e-3);
        assert!((slope(|b| b.1) - 0.375).abs() < 1e-3);
    }

    #[test]
    fn branch_points_rejected() {
        assert!(matches!(ising_four_point_blocks(c(0.0, 0.0), 1.0), Err(AnyonError::BranchPoint(_))));
        assert!(matches!(ising_four_point_blocks(c(1.0, 0.0), 1.0), Err(AnyonError::BranchPoint(_))));
        assert!(ising_four_point_blocks(c(0.3, 0.0), 0.0).is_err());
    }

    #[test]
    fn monodromy_swaps_blocks() {
        let m = ising_monodromy(256).unwrap();
        let ph = C64::from_polar(1.0, PI / 4.0);
        let expect = Matrix2::new(c(0.0, 0.0), ph, ph, c(0.0, 0.0));
        assert!((m - expect).iter().all(|e| e.norm() < 1e-6), "{m}");
    }

    #[test]
    fn two_turns_square() {
        let m = ising_monodromy_on(&MonodromyContour {
            turns: 2,
            ..MonodromyContour::default()
        })
        .unwrap();
        let i = C64::new(0.0, 1.0);
        let expect = Matrix2::new(i, c(0.0, 0.0), c(0.0, 0.0), i);
        assert!((m - expect).iter().all(|e| e.norm() < 1e-6), "{m}");
    }

    #[test]
    fn bad_contours() {
        assert!(ising_monodromy(8).is_err());
        let zero = MonodromyContour {
            radius: 0.0,
            ..MonodromyContour::default()
        };
        assert!(ising_monodromy_on(&zero).is_err());
        let wide = MonodromyContour {
            radius: 1.5,
            ..MonodromyContour::default()
        };
        assert!(ising_monodromy_on(&wide).is_err());
    }

    #[test]
    fn minimum_samples_still_track() {
        let m = ising_monodromy(16).unwrap();
        let ph = C64::from_polar(1.0, PI / 4.0);
        assert!((m[(0, 1)] - ph).norm() < 1e-9);
    }
}

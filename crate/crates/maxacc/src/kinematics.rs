//! Relativistic transformation of accelerations and the kinematic
//! acceleration bounds.
//!
//! Transformations map a particle's rest-frame (proper) acceleration to the
//! acceleration seen in a lab frame where the particle moves with velocity
//! `v`. The proper acceleration always dominates the transformed one, which
//! is what lets a rest-frame bound cap accelerations in every frame.

use std::ops::{Add, Mul, Neg, Sub};

use crate::bound::BoundResult;
use crate::physcore::{self, CODATA};
use crate::{Error, Result};

/// Cartesian three-vector (components in whatever CGS unit the context uses).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Vec3 { x, y, z }
    }

    pub const fn zero() -> Self {
        Vec3 { x: 0.0, y: 0.0, z: 0.0 }
    }

    pub fn dot(self, other: Vec3) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, s: f64) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        self * -1.0
    }
}

/// Relative speed below which the lab-frame speed is treated as unphysical.
const SPEED_GUARD: f64 = 1.0 - 1e-12;

/// Coefficient (1 - 1/gamma) / v^2 (s^2 cm^-2) scaling the longitudinal
/// projection in the acceleration transform.
///
/// Algebraically equal to (1 - gamma)/v^2 + gamma/c^2, but that grouping
/// cancels catastrophically at high gamma; this one stays conditioned at
/// both speed extremes. Zero velocity leaves nothing to project, so the
/// coefficient is zero there.
fn longitudinal_coefficient(v_sq: f64, gamma: f64) -> f64 {
    if v_sq == 0.0 {
        return 0.0;
    }
    (1.0 - 1.0 / gamma) / v_sq
}

fn checked_speed(v: Vec3) -> Result<(f64, f64)> {
    let v_sq = v.norm_sq();
    if !v_sq.is_finite() {
        return Err(Error::Domain("velocity components must be finite".to_string()));
    }
    let speed = v_sq.sqrt();
    if speed >= SPEED_GUARD * CODATA.c {
        return Err(Error::Domain(format!(
            "speed {speed:.6e} cm/s is at or above the speed of light"
        )));
    }
    Ok((v_sq, speed))
}

/// Lab-frame acceleration of a particle with proper (rest-frame)
/// acceleration `a_proper` moving at lab velocity `v` (cm s^-1).
pub fn transform_acceleration(a_proper: Vec3, v: Vec3) -> Result<Vec3> {
    let (v_sq, speed) = checked_speed(v)?;
    let beta_sq = (speed / CODATA.c) * (speed / CODATA.c);
    let gamma = 1.0 / (1.0 - beta_sq).sqrt();
    let va = v.dot(a_proper);
    let coef = longitudinal_coefficient(v_sq, gamma);
    Ok((a_proper - v * (va * coef)) * (1.0 / (gamma * gamma)))
}

/// Magnitude of the lab-frame acceleration, computed directly from the
/// invariant combination |a|^2 - (v.a)^2/c^2 rather than by assembling the
/// transformed vector.
pub fn transformed_magnitude(a_proper: Vec3, v: Vec3) -> Result<f64> {
    let (_, speed) = checked_speed(v)?;
    let beta_sq = (speed / CODATA.c) * (speed / CODATA.c);
    let gamma_sq = 1.0 / (1.0 - beta_sq);
    let va = v.dot(a_proper);
    // Cauchy-Schwarz keeps this non-negative; clamp the float residue.
    let radicand = (a_proper.norm_sq() - va * va / (CODATA.c * CODATA.c)).max(0.0);
    Ok(radicand.sqrt() / gamma_sq)
}

/// Minimal time (s) for a state of mean energy `energy_erg` above its ground
/// state to evolve into an orthogonal state: hbar / (2 E).
pub fn orthogonality_time(energy_erg: f64) -> Result<f64> {
    if !(energy_erg > 0.0) {
        return Err(Error::Domain(format!("energy must be positive, got {energy_erg} erg")));
    }
    Ok(CODATA.hbar / (2.0 * energy_erg))
}

/// Upper bound 2 c dE / hbar (cm s^-2) on the magnitude of the mean
/// acceleration of a system whose energy spread is `delta_e_erg`.
pub fn mean_acceleration_bound(delta_e_erg: f64) -> Result<f64> {
    if !(delta_e_erg > 0.0) {
        return Err(Error::Domain(format!(
            "energy spread must be positive, got {delta_e_erg} erg"
        )));
    }
    Ok(2.0 * CODATA.c * delta_e_erg / CODATA.hbar)
}

/// Correction factor 1 - a^2/A^2 multiplying the proper-time line element,
/// where A is the maximal proper acceleration of the mass. Zero at the
/// bound, negative beyond it (no proper-time interpretation there).
pub fn line_element_factor(proper_acceleration: f64, mass_g: f64) -> Result<f64> {
    let a_max = physcore::maximal_acceleration(mass_g)?;
    let ratio = proper_acceleration / a_max;
    Ok(1.0 - ratio * ratio)
}

/// Checks a proper acceleration against the maximal proper acceleration of
/// the given mass.
pub fn check_ma(proper_acceleration_cm_s2: f64, mass_g: f64) -> Result<BoundResult> {
    let a_max = physcore::maximal_acceleration(mass_g)?;
    Ok(BoundResult::new(
        "proper acceleration vs maximal proper acceleration (cm s^-2)",
        proper_acceleration_cm_s2,
        a_max,
    ))
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;
    use crate::physcore::rest_energy;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    /// SplitMix64: tiny deterministic generator for sampling loops.
    struct Mix(u64);

    impl Mix {
        fn next_u64(&mut self) -> u64 {
            self.0 = self.0.wrapping_add(0x9E3779B97F4A7C15);
            let mut z = self.0;
            z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
            z ^ (z >> 31)
        }

        /// Uniform in [0, 1).
        fn unit(&mut self) -> f64 {
            (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
        }

        /// Uniform in [-1, 1).
        fn signed(&mut self) -> f64 {
            2.0 * self.unit() - 1.0
        }
    }

    #[test]
    fn perpendicular_acceleration_scales_by_inverse_gamma_squared() {
        let v = Vec3::new(0.6 * CODATA.c, 0.0, 0.0);
        let a = Vec3::new(0.0, 1.0, 0.0);
        let t = transform_acceleration(a, v).unwrap();
        // gamma = 1.25 at 0.6c, so the factor is 0.64.
        assert!(rel(t.y, 0.64) < 1e-14);
        assert!(t.x.abs() < 1e-14 && t.z.abs() < 1e-14);
    }

    #[test]
    fn parallel_acceleration_scales_by_inverse_gamma_cubed() {
        let v = Vec3::new(0.6 * CODATA.c, 0.0, 0.0);
        let a = Vec3::new(2.0, 0.0, 0.0);
        let t = transform_acceleration(a, v).unwrap();
        assert!(rel(t.x, 2.0 * 0.512) < 1e-14);
        assert!(t.y.abs() < 1e-14 && t.z.abs() < 1e-14);
    }

    #[test]
    fn zero_velocity_is_the_identity() {
        let a = Vec3::new(3.0, -4.0, 12.0);
        let t = transform_acceleration(a, Vec3::zero()).unwrap();
        assert_eq!(t, a);
    }

    #[test]
    fn low_speed_limit_is_first_order_exact() {
        // At beta = 1e-6 the transform deviates from identity at O(beta^2);
        // the longitudinal coefficient must resolve that tiny correction.
        let a = Vec3::new(1.0, 2.0, 3.0);
        let beta = 1e-6;
        let t = transform_acceleration(a, Vec3::new(beta * CODATA.c, 0.0, 0.0)).unwrap();
        // Parallel component picks up 1 - (3/2) beta^2, perpendicular 1 - beta^2.
        assert!(rel(t.x, a.x * (1.0 - 1.5 * beta * beta)) < 1e-13);
        assert!(rel(t.y, a.y * (1.0 - beta * beta)) < 1e-13);
        assert!(rel(t.z, a.z * (1.0 - beta * beta)) < 1e-13);
    }

    #[test]
    fn superluminal_velocities_are_rejected() {
        let a = Vec3::new(1.0, 0.0, 0.0);
        for speed in [CODATA.c, 1.5 * CODATA.c, (1.0 - 1e-13) * CODATA.c] {
            let v = Vec3::new(speed, 0.0, 0.0);
            assert!(matches!(transform_acceleration(a, v), Err(Error::Domain(_))));
            assert!(matches!(transformed_magnitude(a, v), Err(Error::Domain(_))));
        }
        // Just inside the guard still works.
        let v = Vec3::new((1.0 - 1e-11) * CODATA.c, 0.0, 0.0);
        assert!(transform_acceleration(a, v).is_ok());
    }

    #[test]
    fn magnitude_route_matches_vector_route() {
        let mut rng = Mix(0x5EED_0001);
        for _ in 0..1000 {
            let a = Vec3::new(1e30 * rng.signed(), 1e30 * rng.signed(), 1e30 * rng.signed());
            let v = Vec3::new(rng.signed(), rng.signed(), rng.signed());
            let v = v * (0.999 * CODATA.c * rng.unit() / v.norm().max(1e-300));
            let direct = transformed_magnitude(a, v).unwrap();
            let assembled = transform_acceleration(a, v).unwrap().norm();
            if direct > 0.0 {
                assert!(rel(assembled, direct) < 1e-10, "a={a:?} v={v:?}");
            } else {
                assert!(assembled.abs() < 1e-10);
            }
        }
    }

    #[test]
    fn lab_acceleration_never_exceeds_proper_acceleration() {
        let mut rng = Mix(0x5EED_0002);
        for _ in 0..1000 {
            let a = Vec3::new(1e28 * rng.signed(), 1e28 * rng.signed(), 1e28 * rng.signed());
            let v = Vec3::new(rng.signed(), rng.signed(), rng.signed());
            let v = v * (0.9999 * CODATA.c * rng.unit() / v.norm().max(1e-300));
            let lab = transformed_magnitude(a, v).unwrap();
            assert!(lab <= a.norm() * (1.0 + 1e-12));
        }
    }

    #[test]
    fn orthogonality_time_of_electron_rest_energy() {
        let t = orthogonality_time(rest_energy(CODATA.m_e)).unwrap();
        assert!(rel(t, 6.4404433409877601e-22) < 1e-12);
        // c divided by that time reproduces the maximal acceleration.
        let a = CODATA.c / t;
        assert!(rel(a, physcore::maximal_acceleration(CODATA.m_e).unwrap()) < 1e-15);
    }

    #[test]
    fn mean_bound_at_rest_energy_is_the_maximal_acceleration() {
        for m in [CODATA.m_e, CODATA.m_p, 3.3e-25] {
            let via_bound = mean_acceleration_bound(rest_energy(m)).unwrap();
            let direct = physcore::maximal_acceleration(m).unwrap();
            assert_eq!(via_bound, direct);
        }
    }

    #[test]
    fn fermi_scale_energy_spread_gives_tiny_fraction_of_bound() {
        // Energy spread 3/5 of a 4.5e-12 erg Fermi energy.
        let bound = mean_acceleration_bound(0.6 * 4.5e-12).unwrap();
        assert!(rel(bound, 1.5351057615150373e26) < 1e-12);
        let frac = bound / physcore::maximal_acceleration(CODATA.m_e).unwrap();
        assert!(rel(frac, 3.2978687140493264e-6) < 1e-12);
        assert!(frac < 1e-4);
    }

    #[test]
    fn line_element_factor_behaviour() {
        let a_max = physcore::maximal_acceleration(CODATA.m_e).unwrap();
        assert_eq!(line_element_factor(0.0, CODATA.m_e).unwrap(), 1.0);
        assert_eq!(line_element_factor(a_max, CODATA.m_e).unwrap(), 0.0);
        assert!(line_element_factor(2.0 * a_max, CODATA.m_e).unwrap() < 0.0);
        // Strictly decreasing in |a|.
        let mut prev = 1.0;
        for k in 1..=10 {
            let f = line_element_factor(0.2 * k as f64 * a_max, CODATA.m_e).unwrap();
            assert!(f < prev);
            prev = f;
        }
    }

    #[test]
    fn ma_check_reports_margin() {
        let ok = check_ma(1e30, CODATA.m_e).unwrap();
        assert!(ok.satisfied);
        let over = check_ma(1e32, CODATA.m_e).unwrap();
        assert!(!over.satisfied);
        assert!(over.margin < 0.0);
        assert!(matches!(check_ma(1e30, -1.0), Err(Error::Domain(_))));
    }

    #[test]
    fn nonpositive_energies_are_domain_errors() {
        assert!(matches!(orthogonality_time(0.0), Err(Error::Domain(_))));
        assert!(matches!(mean_acceleration_bound(-1.0), Err(Error::Domain(_))));
    }
}

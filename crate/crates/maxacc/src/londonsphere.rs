//! Meissner-state fields of a superconducting sphere in a uniform applied
//! field, and the electric-field bounds that the acceleration limit puts on
//! the surface layer.
//!
//! Interior solution for applied field B0 along +z, penetration parameter
//! beta (inverse London depth):
//!
//! ```text
//! j_phi(r,t)   =  (C R / r^2) (g(br)/sinh(bR)) sin(t)
//! v_phi        =  j_phi / (n e)
//! B_r(r,t)     = -(8 pi C R / (b^2 c r^3)) (g(br)/sinh(bR)) cos(t)
//! B_theta(r,t) = -(4 pi C R / c) (sinh(br)/(r sinh(bR)) + g(br)/(b^2 r^3 sinh(bR))) sin(t)
//! ```
//!
//! with g(s) = sinh(s) - s cosh(s) and C = (c/4pi)(3 B0/2). This set
//! simultaneously satisfies the London relation curl v = -(e/mc) B, Ampere's
//! law curl B = (4 pi/c) j with j = n e v, div B = 0, and the diamagnetic
//! surface value B_theta(R) -> -(3B0/2) sin(t) for thin penetration; the
//! unit tests check each one by finite differences.
//!
//! All hyperbolic ratios are evaluated in scaled form (factoring e^(s-S))
//! so the solution stays finite for beta*R up to ~1e7.

use crate::bound::BoundResult;
use crate::fmt;
use crate::kinematics::mean_acceleration_bound;
use crate::physcore::{n_per_c_to_statvolt_cm, statvolt_cm_to_n_per_c, CODATA};
use crate::{Error, Result};

/// Inverse London penetration depth sqrt(4 pi n e^2 / (m_e c^2)) (cm^-1)
/// for carrier density `n_cm3`.
pub fn london_beta(n_cm3: f64) -> Result<f64> {
    if !(n_cm3 > 0.0) {
        return Err(Error::Domain(format!("carrier density must be positive, got {n_cm3} cm^-3")));
    }
    Ok((4.0 * std::f64::consts::PI * n_cm3 * CODATA.e_esu * CODATA.e_esu
        / (CODATA.m_e * CODATA.c * CODATA.c))
        .sqrt())
}

/// Superconducting sphere in the Meissner state.
#[derive(Debug, Clone, Copy)]
pub struct SphereModel {
    /// Sphere radius (cm).
    pub radius_cm: f64,
    /// Applied uniform field (G).
    pub b0_gauss: f64,
    /// Superconducting carrier density (cm^-3).
    pub n_cm3: f64,
    /// Critical field (G); the effective surface field is capped here.
    pub b_c_gauss: f64,
    /// Carrier Fermi energy (erg).
    pub epsilon_f_erg: f64,
    /// Temperature (K).
    pub temperature_k: f64,
}

/// Chemical potential and the statistical spreads used in the field bounds.
#[derive(Debug, Clone, Copy)]
pub struct FermiEstimates {
    /// Chemical potential (erg) with the leading thermal correction.
    pub mu_erg: f64,
    /// Energy spread 3 mu / 5 (erg).
    pub delta_e_erg: f64,
    /// Velocity spread (3/2) sqrt(mu / 2 m_e) (cm s^-1).
    pub delta_v_cm_s: f64,
}

/// Fields and flow at one point inside the sphere.
#[derive(Debug, Clone, Copy)]
pub struct FieldSample {
    pub r_cm: f64,
    pub theta_rad: f64,
    pub b_r_gauss: f64,
    pub b_theta_gauss: f64,
    /// Azimuthal screening-current density (statA cm^-2).
    pub j_phi: f64,
    /// Azimuthal carrier velocity (cm s^-1).
    pub v_phi_cm_s: f64,
}

/// One row of a near-surface grid sweep: the field sample plus both sides of
/// the acceleration inequality at that point.
#[derive(Debug, Clone, Copy)]
pub struct GridRow {
    pub sample: FieldSample,
    /// |grad(v^2)/2 + (e/m c) v x B| (cm s^-2).
    pub ma_lhs: f64,
    /// Mean-acceleration bound 2 dE dv / hbar (cm s^-2).
    pub ma_rhs: f64,
}

impl SphereModel {
    pub fn new(
        radius_cm: f64,
        b0_gauss: f64,
        n_cm3: f64,
        b_c_gauss: f64,
        epsilon_f_erg: f64,
        temperature_k: f64,
    ) -> Result<Self> {
        for (name, v) in [
            ("radius", radius_cm),
            ("applied field", b0_gauss),
            ("carrier density", n_cm3),
            ("critical field", b_c_gauss),
            ("Fermi energy", epsilon_f_erg),
            ("temperature", temperature_k),
        ] {
            if !(v > 0.0) {
                return Err(Error::Domain(format!("{name} must be positive, got {v}")));
            }
        }
        Ok(SphereModel { radius_cm, b0_gauss, n_cm3, b_c_gauss, epsilon_f_erg, temperature_k })
    }

    /// Generic type-I sphere: 1 cm radius, 200 G applied (surface field at
    /// the 300 G critical field), 1e22 cm^-3 carriers, 4.5e-12 erg Fermi
    /// energy, 1 K.
    pub fn type_i_default() -> Self {
        SphereModel {
            radius_cm: 1.0,
            b0_gauss: 200.0,
            n_cm3: 1e22,
            b_c_gauss: 300.0,
            epsilon_f_erg: 4.5e-12,
            temperature_k: 1.0,
        }
    }

    /// Sphere whose carrier density and critical field are solved backwards
    /// from a target surface speed and a target surface radial electric
    /// field. Radius stays 1 cm and the applied field sits at 2/3 of the
    /// critical field so the surface field equals the critical field.
    pub fn back_solved(v0_cm_s: f64, e_r_n_per_c: f64) -> Result<Self> {
        if !(v0_cm_s > 0.0) || !(e_r_n_per_c > 0.0) {
            return Err(Error::Domain(format!(
                "surface speed and field targets must be positive, got {v0_cm_s} and {e_r_n_per_c}"
            )));
        }
        let e_statvolt = n_per_c_to_statvolt_cm(e_r_n_per_c);
        let beta = CODATA.e_esu * e_statvolt / (CODATA.m_e * v0_cm_s * v0_cm_s);
        let n = beta * beta * CODATA.m_e * CODATA.c * CODATA.c
            / (4.0 * std::f64::consts::PI * CODATA.e_esu * CODATA.e_esu);
        let b_c = v0_cm_s * CODATA.m_e * CODATA.c * beta / CODATA.e_esu;
        SphereModel::new(1.0, 2.0 * b_c / 3.0, n, b_c, 4.5e-12, 1.0)
    }

    /// Inverse penetration depth (cm^-1).
    pub fn beta(&self) -> f64 {
        london_beta(self.n_cm3).expect("validated at construction")
    }

    /// London penetration depth (cm).
    pub fn lambda_london(&self) -> f64 {
        1.0 / self.beta()
    }

    /// Effective surface field 3 B0 / 2, capped at the critical field (G).
    pub fn surface_field(&self) -> f64 {
        (1.5 * self.b0_gauss).min(self.b_c_gauss)
    }

    /// Carrier speed at the equator surface, e B_s / (m_e c beta) (cm s^-1).
    pub fn surface_speed(&self) -> f64 {
        CODATA.e_esu * self.surface_field() / (CODATA.m_e * CODATA.c * self.beta())
    }

    /// Whether the penetration depth is thin on the sphere scale
    /// (beta R >= 100), the regime the surface-layer formulas assume.
    pub fn thin_penetration(&self) -> bool {
        self.beta() * self.radius_cm >= 100.0
    }

    /// Chemical potential and statistical spreads at the model temperature.
    pub fn fermi_estimates(&self) -> Result<FermiEstimates> {
        fermi_estimates(self.epsilon_f_erg, self.temperature_k)
    }
}

/// Scaled hyperbolic ratios sinh(s)/sinh(S) and g(s)/sinh(S) with
/// g(s) = sinh(s) - s cosh(s), stable for s, S up to ~1e7.
///
/// Requires 0 <= s <= S. The common factor e^(s-S) is applied after the
/// bracketed combinations, which stay O(s); a series handles s < 0.2 where
/// g(s) cancels catastrophically.
fn scaled_ratios(s: f64, s_surface: f64) -> (f64, f64) {
    let e_d = (s - s_surface).exp();
    let e2s = (-2.0 * s).exp();
    let den = 1.0 - (-2.0 * s_surface).exp();
    let sinh_ratio = e_d * 0.5 * (1.0 - e2s) / (0.5 * den);
    let g_ratio = if s < 0.2 {
        // g(s) = -(s^3/3)(1 + s^2/10 + s^4/280 + s^6/15120) + O(s^11)
        let s2 = s * s;
        let g = -(s2 * s / 3.0) * (1.0 + s2 / 10.0 + s2 * s2 / 280.0 + s2 * s2 * s2 / 15120.0);
        g * 2.0 * (-s_surface).exp() / den
    } else {
        e_d * ((1.0 - e2s) - s * (1.0 + e2s)) / den
    };
    (sinh_ratio, g_ratio)
}

fn check_point(model: &SphereModel, r_cm: f64, theta_rad: f64) -> Result<()> {
    if !(r_cm > 0.0) || r_cm > model.radius_cm {
        return Err(Error::Domain(format!(
            "radius {r_cm} cm outside the sphere interior (0, {}]",
            model.radius_cm
        )));
    }
    if !(0.0..=std::f64::consts::PI).contains(&theta_rad) {
        return Err(Error::Domain(format!("polar angle {theta_rad} rad outside [0, pi]")));
    }
    Ok(())
}

/// Current normalization C = (c / 4 pi)(3 B0 / 2).
fn current_scale(model: &SphereModel) -> f64 {
    CODATA.c / (4.0 * std::f64::consts::PI) * 1.5 * model.b0_gauss
}

/// Interior fields, current, and carrier velocity at (r, theta).
pub fn field_solution(model: &SphereModel, r_cm: f64, theta_rad: f64) -> Result<FieldSample> {
    check_point(model, r_cm, theta_rad)?;
    let beta = model.beta();
    let (s, s_surface) = (beta * r_cm, beta * model.radius_cm);
    let (sinh_ratio, g_ratio) = scaled_ratios(s, s_surface);
    let c_scale = current_scale(model);
    let (sin_t, cos_t) = (theta_rad.sin(), theta_rad.cos());
    let cr = c_scale * model.radius_cm;

    let j_phi = cr / (r_cm * r_cm) * g_ratio * sin_t;
    let v_phi = j_phi / (model.n_cm3 * CODATA.e_esu);
    let four_pi = 4.0 * std::f64::consts::PI;
    let b_r = -(2.0 * four_pi * cr / (beta * beta * CODATA.c * r_cm.powi(3))) * g_ratio * cos_t;
    let b_theta = -(four_pi * cr / CODATA.c)
        * sin_t
        * (sinh_ratio / r_cm + g_ratio / (beta * beta * r_cm.powi(3)));

    Ok(FieldSample {
        r_cm,
        theta_rad,
        b_r_gauss: b_r,
        b_theta_gauss: b_theta,
        j_phi,
        v_phi_cm_s: v_phi,
    })
}

/// v_phi and its analytic r- and theta-derivatives at (r, theta).
fn v_phi_with_gradient(model: &SphereModel, r_cm: f64, theta_rad: f64) -> (f64, f64, f64) {
    let beta = model.beta();
    let (s, s_surface) = (beta * r_cm, beta * model.radius_cm);
    let (sinh_ratio, g_ratio) = scaled_ratios(s, s_surface);
    let w = current_scale(model) * model.radius_cm / (model.n_cm3 * CODATA.e_esu);
    let (sin_t, cos_t) = (theta_rad.sin(), theta_rad.cos());
    let h = g_ratio / (r_cm * r_cm);
    let dh_dr = -beta * beta * sinh_ratio / r_cm - 2.0 * g_ratio / r_cm.powi(3);
    (w * h * sin_t, w * dh_dr * sin_t, w * h * cos_t)
}

/// Radial electric field (statvolt cm^-1) sustaining the London flow,
/// E_r = (m_e / 2 e) d(v_phi^2)/dr.
pub fn london_electric_field_r(model: &SphereModel, r_cm: f64, theta_rad: f64) -> Result<f64> {
    check_point(model, r_cm, theta_rad)?;
    let (v, dv_dr, _) = v_phi_with_gradient(model, r_cm, theta_rad);
    Ok(CODATA.m_e / CODATA.e_esu * v * dv_dr)
}

/// Surface radial electric field at the equator in the thin-penetration
/// limit, m_e beta v0^2 / e, converted to N C^-1.
pub fn london_er_surface(model: &SphereModel) -> Result<f64> {
    if !model.thin_penetration() {
        return Err(Error::Regime(format!(
            "penetration depth is not thin: beta R = {:.3e} < 100",
            model.beta() * model.radius_cm
        )));
    }
    let v0 = model.surface_speed();
    let e_statvolt = CODATA.m_e * model.beta() * v0 * v0 / CODATA.e_esu;
    Ok(statvolt_cm_to_n_per_c(e_statvolt))
}

/// Chemical potential with leading thermal correction,
/// mu = eps_F (1 - (pi^2/12)(k_B T / eps_F)^2), and the spreads derived
/// from it. Errors when thermal smearing wipes out the Fermi sea.
pub fn fermi_estimates(epsilon_f_erg: f64, temperature_k: f64) -> Result<FermiEstimates> {
    if !(epsilon_f_erg > 0.0) {
        return Err(Error::Domain(format!(
            "Fermi energy must be positive, got {epsilon_f_erg} erg"
        )));
    }
    if temperature_k < 0.0 || !temperature_k.is_finite() {
        return Err(Error::Domain(format!(
            "temperature must be non-negative, got {temperature_k} K"
        )));
    }
    let t_ratio = CODATA.k_b * temperature_k / epsilon_f_erg;
    let mu = epsilon_f_erg
        * (1.0 - std::f64::consts::PI * std::f64::consts::PI / 12.0 * t_ratio * t_ratio);
    if !(mu > 0.0) {
        return Err(Error::Regime(format!(
            "thermal smearing exceeds the Fermi energy (k_B T / eps_F = {t_ratio:.3e})"
        )));
    }
    Ok(FermiEstimates {
        mu_erg: mu,
        delta_e_erg: 0.6 * mu,
        delta_v_cm_s: 1.5 * (mu / (2.0 * CODATA.m_e)).sqrt(),
    })
}

/// Whether the pairing-energy spread can absorb the magnetic splitting
/// mu_B |B_r|; the statistical field bound is real only when it can.
pub fn reality_condition(delta_e_erg: f64, b_r_gauss: f64) -> BoundResult {
    BoundResult::new(
        "magnetic splitting vs pairing energy spread (erg)",
        CODATA.mu_b * b_r_gauss.abs(),
        delta_e_erg,
    )
}

/// Statistical bound (statvolt cm^-1) on the radial electric field given the
/// local field components:
/// (dv/c) (|B_theta| + sqrt((dE/mu_B)^2 - B_r^2)).
pub fn statistical_bound_fields(
    est: &FermiEstimates,
    b_r_gauss: f64,
    b_theta_gauss: f64,
) -> Result<f64> {
    let split_gauss = est.delta_e_erg / CODATA.mu_b;
    let radicand = split_gauss * split_gauss - b_r_gauss * b_r_gauss;
    if radicand < 0.0 {
        return Err(Error::Reality {
            delta_e_erg: est.delta_e_erg,
            splitting_erg: CODATA.mu_b * b_r_gauss.abs(),
        });
    }
    Ok(est.delta_v_cm_s / CODATA.c * (b_theta_gauss.abs() + radicand.sqrt()))
}

/// Statistical bound on the radial electric field at (r, theta), compared
/// against the London field actually present there. Both in N C^-1.
pub fn er_bound_statistical(model: &SphereModel, r_cm: f64, theta_rad: f64) -> Result<BoundResult> {
    let est = model.fermi_estimates()?;
    let sample = field_solution(model, r_cm, theta_rad)?;
    let bound_statvolt = statistical_bound_fields(&est, sample.b_r_gauss, sample.b_theta_gauss)?;
    let e_r = london_electric_field_r(model, r_cm, theta_rad)?;
    Ok(BoundResult::new(
        "radial electric field vs statistical acceleration bound (N C^-1)",
        statvolt_cm_to_n_per_c(e_r.abs()),
        statvolt_cm_to_n_per_c(bound_statvolt),
    ))
}

/// Field-free reduction of the statistical bound, (dv/c)(dE/mu_B), in N C^-1.
pub fn er_bound_field_free(model: &SphereModel) -> Result<f64> {
    let est = model.fermi_estimates()?;
    Ok(statvolt_cm_to_n_per_c(est.delta_v_cm_s / CODATA.c * (est.delta_e_erg / CODATA.mu_b)))
}

/// Equator form of the field bound for a surface carrier speed `v0`:
/// (v0/c)(|B_theta| + m_e v0^2 / (2 mu_B)), in N C^-1. The value slot is
/// zero; this is a pure bound, not a comparison.
pub fn er_bound_equator(v0_cm_s: f64, b_theta_gauss: f64) -> Result<BoundResult> {
    if !(v0_cm_s > 0.0) {
        return Err(Error::Domain(format!("surface speed must be positive, got {v0_cm_s} cm/s")));
    }
    let split_gauss = CODATA.m_e * v0_cm_s * v0_cm_s / (2.0 * CODATA.mu_b);
    let bound_statvolt = v0_cm_s / CODATA.c * (b_theta_gauss.abs() + split_gauss);
    Ok(BoundResult::new(
        "equator radial electric field bound (N C^-1)",
        0.0,
        statvolt_cm_to_n_per_c(bound_statvolt),
    ))
}

/// Tangential field (G) that makes the equator bound equal a target radial
/// field given in N C^-1.
pub fn back_solved_b_theta(target_n_per_c: f64, v0_cm_s: f64) -> Result<f64> {
    if !(target_n_per_c > 0.0) || !(v0_cm_s > 0.0) {
        return Err(Error::Domain(format!(
            "targets must be positive, got {target_n_per_c} N/C at {v0_cm_s} cm/s"
        )));
    }
    let e_statvolt = n_per_c_to_statvolt_cm(target_n_per_c);
    Ok(CODATA.c * e_statvolt / v0_cm_s - CODATA.m_e * v0_cm_s * v0_cm_s / (2.0 * CODATA.mu_b))
}

/// Both sides of the acceleration inequality for a superfluid element at
/// (r, theta): left side |grad(v^2)/2 + (e/m_e c) v x B|, right side the
/// mean-acceleration bound for the given spreads.
pub fn ma_inequality_check(
    model: &SphereModel,
    r_cm: f64,
    theta_rad: f64,
    est: &FermiEstimates,
) -> Result<BoundResult> {
    check_point(model, r_cm, theta_rad)?;
    let sample = field_solution(model, r_cm, theta_rad)?;
    let (v, dv_dr, dv_dt) = v_phi_with_gradient(model, r_cm, theta_rad);
    // grad(v^2)/2 in spherical components; dv_dt is the theta-derivative of
    // v_phi, so the theta component carries the 1/r.
    let grad_r = v * dv_dr;
    let grad_t = v * dv_dt / r_cm;
    // (v x B) = (-v_phi B_theta, v_phi B_r) in (r, theta) components.
    let k = CODATA.e_esu / (CODATA.m_e * CODATA.c);
    let lhs_r = grad_r - k * v * sample.b_theta_gauss;
    let lhs_t = grad_t + k * v * sample.b_r_gauss;
    let lhs = (lhs_r * lhs_r + lhs_t * lhs_t).sqrt();
    let rhs = mean_acceleration_bound(est.delta_e_erg)? * (est.delta_v_cm_s / CODATA.c);
    Ok(BoundResult::new(
        "superfluid element acceleration vs mean-acceleration bound (cm s^-2)",
        lhs,
        rhs,
    ))
}

/// Sweeps a near-surface grid: depths log-spaced over [0.01, 20] penetration
/// depths below the surface, polar angle uniform over [0, pi].
pub fn grid_sweep(model: &SphereModel, n_depth: usize, n_theta: usize) -> Result<Vec<GridRow>> {
    if n_depth < 2 || n_theta < 2 {
        return Err(Error::Domain(format!(
            "grid needs at least 2 points per axis, got {n_depth} x {n_theta}"
        )));
    }
    let est = model.fermi_estimates()?;
    let beta = model.beta();
    let (d_min, d_max) = (0.01 / beta, 20.0 / beta);
    if d_max >= model.radius_cm {
        return Err(Error::Regime(format!(
            "sphere radius {} cm is shallower than the 20 penetration-depth sweep",
            model.radius_cm
        )));
    }
    let log_step = (d_max / d_min).ln() / (n_depth - 1) as f64;
    let mut rows = Vec::with_capacity(n_depth * n_theta);
    for i in 0..n_depth {
        let depth = d_min * (log_step * i as f64).exp();
        let r = model.radius_cm - depth;
        for j in 0..n_theta {
            let theta = std::f64::consts::PI * j as f64 / (n_theta - 1) as f64;
            let check = ma_inequality_check(model, r, theta, &est)?;
            let sample = field_solution(model, r, theta)?;
            rows.push(GridRow { sample, ma_lhs: check.value, ma_rhs: check.bound });
        }
    }
    Ok(rows)
}

pub const GRID_CSV_HEADER: [&str; 8] =
    ["r", "theta", "B_r", "B_theta", "j_phi", "v_phi", "ma_lhs", "ma_rhs"];

/// Renders sweep rows as CSV with 9-significant-digit cells.
pub fn grid_csv(rows: &[GridRow]) -> String {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|row| {
            vec![
                fmt::sig9(row.sample.r_cm),
                fmt::sig9(row.sample.theta_rad),
                fmt::sig9(row.sample.b_r_gauss),
                fmt::sig9(row.sample.b_theta_gauss),
                fmt::sig9(row.sample.j_phi),
                fmt::sig9(row.sample.v_phi_cm_s),
                fmt::sig9(row.ma_lhs),
                fmt::sig9(row.ma_rhs),
            ]
        })
        .collect();
    fmt::csv_string(&GRID_CSV_HEADER, &cells)
}

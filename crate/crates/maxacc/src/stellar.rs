//! Degenerate-star structure when the acceleration bound corrects the Fermi
//! pressure.
//!
//! Dimensionless variables throughout: for fermion mass m and mass-per-
//! fermion mu (the stellar mass carried per pressure-providing fermion),
//!
//! ```text
//! M~ = (9 pi / 4) (M / mu)        scaled star mass
//! R~ = R m c / hbar               scaled radius
//! x_F = M~^(1/3) / R~             Fermi momentum over m c
//! N/V = (8 pi / 3 lambda^3) M~ / R~^3
//! ```
//!
//! with lambda the fermion Compton wavelength. The degeneracy-pressure scale
//! is K = m^4 c^5 / (12 pi^2 hbar^3) and the gravitational coupling
//! K' = 16 K G mu^2 alpha / (27 pi hbar c); the threshold-mass scale is
//! M~0 = (K/K')^(3/2).

use crate::fmt;
use crate::physcore::{self, CODATA};
use crate::quad;
use crate::{Error, Result};

const PI: f64 = std::f64::consts::PI;

/// Evaluation regime for the Fermi energy integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FermiRegime {
    /// Leading non-relativistic reduction x^3/3 (1 + 3 x^2 / 10).
    NonRelativistic,
    /// Leading extreme-relativistic reduction x^4/4 (1 + 1/x^2).
    ExtremeRelativistic,
    /// Full closed form.
    Exact,
}

/// Dimensionless energy integral f(x) = int_0^x t^2 sqrt(1 + t^2) dt,
/// evaluated per the regime's reduction.
///
/// The exact branch uses the closed form
/// (1/8)[x (1 + 2 x^2) sqrt(1 + x^2) - asinh x], switching to its series
/// below x = 0.05 where the closed form loses digits to cancellation.
pub fn fermi_integral(x: f64, regime: FermiRegime) -> Result<f64> {
    if !(x >= 0.0) {
        return Err(Error::Domain(format!("Fermi momentum ratio must be non-negative, got {x}")));
    }
    let x2 = x * x;
    Ok(match regime {
        FermiRegime::NonRelativistic => x2 * x / 3.0 * (1.0 + 0.3 * x2),
        FermiRegime::ExtremeRelativistic => 0.25 * (x2 * x2 + x2),
        FermiRegime::Exact => {
            if x < 0.05 {
                x2 * x
                    * (1.0 / 3.0 + x2 / 10.0 - x2 * x2 / 56.0 + x2 * x2 * x2 / 144.0
                        - 5.0 * x2 * x2 * x2 * x2 / 1408.0)
            } else {
                0.125 * (x * (1.0 + 2.0 * x2) * (1.0 + x2).sqrt() - x.asinh())
            }
        }
    })
}

/// Same integral by adaptive quadrature; exists only as an independent
/// cross-check of the closed form. The absolute budget scales with the
/// x^3/3 leading size of the integral so the accuracy stays relative over
/// the whole domain, small x included.
pub fn fermi_integral_quadrature(x: f64) -> Result<f64> {
    if !(x >= 0.0) {
        return Err(Error::Domain(format!("Fermi momentum ratio must be non-negative, got {x}")));
    }
    let scale = (x * x * x / 3.0).max(f64::MIN_POSITIVE);
    Ok(quad::adaptive_simpson(|t| t * t * (1.0 + t * t).sqrt(), 0.0, x, 1e-13 * scale, 1e-13))
}

/// Cold Fermi gas of one species at a given number density.
#[derive(Debug, Clone, Copy)]
pub struct FermiGasState {
    pub density_cm3: f64,
    pub fermion_mass_g: f64,
    pub regime: FermiRegime,
    /// Fermi momentum hbar (3 pi^2 n)^(1/3) (g cm s^-1).
    pub p_f: f64,
    /// Relativity parameter p_F / (m c).
    pub x_f: f64,
}

impl FermiGasState {
    pub fn new(density_cm3: f64, fermion_mass_g: f64, regime: FermiRegime) -> Result<Self> {
        if !(density_cm3 > 0.0) {
            return Err(Error::Domain(format!(
                "number density must be positive, got {density_cm3} cm^-3"
            )));
        }
        if !(fermion_mass_g > 0.0) {
            return Err(Error::Domain(format!(
                "fermion mass must be positive, got {fermion_mass_g} g"
            )));
        }
        let p_f = CODATA.hbar * (3.0 * PI * PI * density_cm3).cbrt();
        let x_f = p_f / (fermion_mass_g * CODATA.c);
        Ok(FermiGasState { density_cm3, fermion_mass_g, regime, p_f, x_f })
    }

    /// Warns when the chosen reduction is used outside its comfort zone
    /// (non-relativistic beyond x_F = 0.3, extreme-relativistic below
    /// x_F = 3). The reductions stay evaluable either way.
    pub fn regime_warning(&self) -> Option<String> {
        match self.regime {
            FermiRegime::NonRelativistic if self.x_f > 0.3 => Some(format!(
                "x_F = {:.3} is beyond the non-relativistic range (x_F < 0.3)",
                self.x_f
            )),
            FermiRegime::ExtremeRelativistic if self.x_f < 3.0 => Some(format!(
                "x_F = {:.3} is below the extreme-relativistic range (x_F > 3)",
                self.x_f
            )),
            _ => None,
        }
    }
}

/// Ground-state energy (erg) of the gas filling `volume_cm3`:
/// (m^4 c^5 / pi^2 hbar^3) V f(x_F).
pub fn ground_state_energy(state: &FermiGasState, volume_cm3: f64) -> Result<f64> {
    if !(volume_cm3 > 0.0) {
        return Err(Error::Domain(format!("volume must be positive, got {volume_cm3} cm^3")));
    }
    let m = state.fermion_mass_g;
    let scale = m.powi(4) * CODATA.c.powi(5) / (PI * PI * CODATA.hbar.powi(3));
    Ok(scale * volume_cm3 * fermi_integral(state.x_f, state.regime)?)
}

/// Mean acceleration (cm s^-2) of a fermion confined within radius `r_cm`:
/// 9 c^2 f(x_F) / (x_F^3 r).
pub fn mean_acceleration(state: &FermiGasState, r_cm: f64) -> Result<f64> {
    if !(r_cm > 0.0) {
        return Err(Error::Domain(format!("radius must be positive, got {r_cm} cm")));
    }
    let f = fermi_integral(state.x_f, state.regime)?;
    Ok(9.0 * CODATA.c * CODATA.c * f / (state.x_f.powi(3) * r_cm))
}

/// Confinement radius (cm) at which the mean acceleration reaches the
/// maximal acceleration of the fermion. Non-relativistic reduction gives
/// the density-independent 3 lambda / (4 pi); extreme-relativistic gives
/// (9/16 pi) lambda x_F. The exact regime has no closed reduction here.
pub fn ma_radius(state: &FermiGasState) -> Result<f64> {
    let lambda = physcore::compton_wavelength(state.fermion_mass_g)?;
    match state.regime {
        FermiRegime::NonRelativistic => Ok(3.0 * lambda / (4.0 * PI)),
        FermiRegime::ExtremeRelativistic => Ok(9.0 / (16.0 * PI) * lambda * state.x_f),
        FermiRegime::Exact => Err(Error::Regime(
            "saturation radius has closed forms only in the non- and extreme-relativistic \
             reductions"
                .to_string(),
        )),
    }
}

/// Mean occupancy (4 / 9 pi)(r p_F / hbar)^3 of a cell of radius `r_cm`.
pub fn ma_occupancy(state: &FermiGasState, r_cm: f64) -> Result<f64> {
    if !(r_cm > 0.0) {
        return Err(Error::Domain(format!("radius must be positive, got {r_cm} cm")));
    }
    let u = r_cm * state.p_f / CODATA.hbar;
    Ok(4.0 / (9.0 * PI) * u.powi(3))
}

/// Pressure (dyn cm^-2) exerted when `q` fermions per cell push with the
/// maximal-acceleration force through a cell of radius `r_cm`:
/// q m A_max / (4 pi r^2).
pub fn ma_pressure(state: &FermiGasState, r_cm: f64) -> Result<f64> {
    let q = ma_occupancy(state, r_cm)?;
    let force = state.fermion_mass_g * physcore::maximal_acceleration(state.fermion_mass_g)?;
    Ok(q * force / (4.0 * PI * r_cm * r_cm))
}

/// Density (cm^-3) at which the saturation-radius cell holds exactly one
/// fermion: (2/9 pi)(m c/hbar)^3 non-relativistic,
/// sqrt(128 pi/81) (m c/hbar)^3 / (3 pi^2) extreme-relativistic.
pub fn density_for_unit_occupancy(regime: FermiRegime, fermion_mass_g: f64) -> Result<f64> {
    let inv_lambda_bar = fermion_mass_g * CODATA.c / CODATA.hbar;
    let cube = inv_lambda_bar.powi(3);
    match regime {
        FermiRegime::NonRelativistic => Ok(2.0 / (9.0 * PI) * cube),
        FermiRegime::ExtremeRelativistic => Ok((128.0 * PI / 81.0).sqrt() * cube / (3.0 * PI * PI)),
        FermiRegime::Exact => Err(Error::Regime(
            "unit-occupancy density has closed forms only in the non- and extreme-relativistic \
             reductions"
                .to_string(),
        )),
    }
}

/// Density (cm^-3) at which x_F = 1, the crossover between the reductions:
/// (m c / hbar)^3 / (3 pi^2).
pub fn density_at_unit_x(fermion_mass_g: f64) -> Result<f64> {
    if !(fermion_mass_g > 0.0) {
        return Err(Error::Domain(format!(
            "fermion mass must be positive, got {fermion_mass_g} g"
        )));
    }
    let inv_lambda_bar = fermion_mass_g * CODATA.c / CODATA.hbar;
    Ok(inv_lambda_bar.powi(3) / (3.0 * PI * PI))
}

/// Occupancy of the non-relativistic saturation cell as a function of
/// density alone: (9 lambda^3 / 16 pi^2) (N/V).
pub fn occupancy_from_density(density_cm3: f64, fermion_mass_g: f64) -> Result<f64> {
    if !(density_cm3 >= 0.0) {
        return Err(Error::Domain(format!(
            "number density must be non-negative, got {density_cm3} cm^-3"
        )));
    }
    let lambda = physcore::compton_wavelength(fermion_mass_g)?;
    Ok(9.0 * lambda.powi(3) / (16.0 * PI * PI) * density_cm3)
}

/// Self-gravitating cold star supported by one fermion species.
#[derive(Debug, Clone, Copy)]
pub struct StarModel {
    pub mass_g: f64,
    /// Species providing the degeneracy pressure.
    pub fermion_label: &'static str,
    pub fermion_mass_g: f64,
    /// Stellar mass carried per pressure fermion.
    pub mass_per_fermion_g: f64,
    /// Order-unity structure constant multiplying the gravitational term.
    pub alpha: f64,
}

impl StarModel {
    /// Electron-supported star: two nucleon masses per electron.
    pub fn white_dwarf(mass_g: f64) -> Result<Self> {
        StarModel::build(mass_g, "electron", CODATA.m_e, 2.0 * CODATA.m_p)
    }

    /// Neutron-supported star: the pressure fermion carries its own mass.
    pub fn neutron_star(mass_g: f64) -> Result<Self> {
        StarModel::build(mass_g, "neutron", CODATA.m_n, CODATA.m_n)
    }

    fn build(
        mass_g: f64,
        fermion_label: &'static str,
        fermion_mass_g: f64,
        mass_per_fermion_g: f64,
    ) -> Result<Self> {
        if !(mass_g > 0.0) {
            return Err(Error::Domain(format!("star mass must be positive, got {mass_g} g")));
        }
        Ok(StarModel { mass_g, fermion_label, fermion_mass_g, mass_per_fermion_g, alpha: 1.0 })
    }

    pub fn with_alpha(mut self, alpha: f64) -> Result<Self> {
        if !(alpha > 0.0) {
            return Err(Error::Domain(format!("structure constant must be positive, got {alpha}")));
        }
        self.alpha = alpha;
        Ok(self)
    }

    /// Degeneracy-pressure scale K = m^4 c^5 / (12 pi^2 hbar^3) (dyn cm^-2).
    pub fn k_degeneracy(&self) -> f64 {
        self.fermion_mass_g.powi(4) * CODATA.c.powi(5) / (12.0 * PI * PI * CODATA.hbar.powi(3))
    }

    /// Gravitational coupling K' = 16 K G mu^2 alpha / (27 pi hbar c).
    pub fn k_gravity(&self) -> f64 {
        16.0 * self.k_degeneracy() * CODATA.grav * self.mass_per_fermion_g.powi(2) * self.alpha
            / (27.0 * PI * CODATA.hbar * CODATA.c)
    }

    /// Scaled mass (9 pi / 4) M / mu of this star.
    pub fn m_tilde(&self) -> f64 {
        9.0 * PI / 4.0 * self.mass_g / self.mass_per_fermion_g
    }

    /// Threshold-mass scale (K / K')^(3/2) in scaled units.
    pub fn m_tilde0(&self) -> f64 {
        (self.k_degeneracy() / self.k_gravity()).powf(1.5)
    }

    /// Threshold-mass scale in grams: M0 = (4 / 9 pi) mu M~0.
    pub fn reference_mass_g(&self) -> f64 {
        4.0 / (9.0 * PI) * self.mass_per_fermion_g * self.m_tilde0()
    }

    fn radius_cm(&self, r_tilde: f64) -> f64 {
        r_tilde * CODATA.hbar / (self.fermion_mass_g * CODATA.c)
    }

    fn density_cm3(&self, r_tilde: f64) -> f64 {
        let lambda = CODATA.h / (self.fermion_mass_g * CODATA.c);
        8.0 * PI / (3.0 * lambda.powi(3)) * self.m_tilde() / r_tilde.powi(3)
    }
}

/// One equilibrium radius with its derived surface quantities.
#[derive(Debug, Clone)]
pub struct EquilibriumBranch {
    /// "compact" or "extended" for the two non-relativistic roots, "er" for
    /// the single extreme-relativistic one.
    pub label: &'static str,
    pub r_tilde: f64,
    pub radius_cm: f64,
    pub density_cm3: f64,
    /// Saturation-cell occupancy at the branch density.
    pub q_ma: f64,
}

/// Equilibrium radii of a star in one regime.
#[derive(Debug, Clone)]
pub struct EquilibriumSolution {
    pub regime: FermiRegime,
    pub mass_g: f64,
    /// Whether real equilibrium radii exist at this mass.
    pub real: bool,
    pub branches: Vec<EquilibriumBranch>,
    /// Mass at which the solution family degenerates: the two
    /// non-relativistic roots merge there; the extreme-relativistic radius
    /// reaches zero there.
    pub threshold_mass_g: f64,
}

fn make_branch(star: &StarModel, label: &'static str, r_tilde: f64) -> Result<EquilibriumBranch> {
    let density = if r_tilde > 0.0 { star.density_cm3(r_tilde) } else { f64::INFINITY };
    let q_ma = if density.is_finite() {
        occupancy_from_density(density, star.fermion_mass_g)?
    } else {
        f64::INFINITY
    };
    Ok(EquilibriumBranch {
        label,
        r_tilde,
        radius_cm: star.radius_cm(r_tilde),
        density_cm3: density,
        q_ma,
    })
}

/// Mass (g) below which the non-relativistic balance has no real roots:
/// (64/5)^(3/4) M0.
pub fn nr_threshold_mass(star: &StarModel) -> f64 {
    (64.0f64 / 5.0).powf(0.75) * star.reference_mass_g()
}

/// Non-relativistic equilibrium: maximal-acceleration pressure plus
/// degeneracy pressure against gravity,
/// 4 K R~^2 - K' M~ R~ + (4/5) K M~^(2/3) = 0.
///
/// Gravity is the only negative term, so a real root pair exists at and
/// above the threshold mass and none below it. Discriminant noise within
/// 1e-12 of its scale is clamped to zero so the threshold itself reports
/// coincident branches.
pub fn nr_equilibrium(star: &StarModel) -> Result<EquilibriumSolution> {
    let k = star.k_degeneracy();
    let k_grav = star.k_gravity();
    let m_tilde = star.m_tilde();
    let b = k_grav * m_tilde;
    let mut disc = b * b - 64.0 / 5.0 * k * k * m_tilde.powf(2.0 / 3.0);
    if disc.abs() < 1e-12 * b * b {
        disc = 0.0;
    }
    let real = disc >= 0.0;
    let mut branches = Vec::new();
    if real {
        let sqrt_disc = disc.sqrt();
        let r_minus = (b - sqrt_disc) / (8.0 * k);
        let r_plus = (b + sqrt_disc) / (8.0 * k);
        branches.push(make_branch(star, "compact", r_minus)?);
        branches.push(make_branch(star, "extended", r_plus)?);
    }
    Ok(EquilibriumSolution {
        regime: FermiRegime::NonRelativistic,
        mass_g: star.mass_g,
        real,
        branches,
        threshold_mass_g: nr_threshold_mass(star),
    })
}

/// Relative residual of the non-relativistic balance at `r_tilde`.
pub fn nr_residual(star: &StarModel, r_tilde: f64) -> f64 {
    let k = star.k_degeneracy();
    let m_tilde = star.m_tilde();
    let t1 = 4.0 * k * r_tilde * r_tilde;
    let t2 = -star.k_gravity() * m_tilde * r_tilde;
    let t3 = 0.8 * k * m_tilde.powf(2.0 / 3.0);
    (t1 + t2 + t3) / t1.abs().max(t2.abs()).max(t3.abs())
}

/// Both sides of the non-relativistic mass-radius relation
/// M~^(1/3) R~ = (4/5) M~0^(2/3) (1 + 5 R~^2 / M~^(2/3)); the correction
/// term inside the parentheses is the classical (bound-free) part.
pub fn mr_relation_sides(star: &StarModel, r_tilde: f64) -> (f64, f64) {
    let m_tilde = star.m_tilde();
    let m23 = m_tilde.cbrt().powi(2);
    let lhs = m_tilde.cbrt() * r_tilde;
    let rhs = 0.8 * star.m_tilde0().cbrt().powi(2) * (1.0 + 5.0 * r_tilde * r_tilde / m23);
    (lhs, rhs)
}

/// Whether the acceleration correction in the mass-radius relation is
/// ignorable at `r_tilde`: it is while R~ / M~^(1/3) stays at or below
/// 1/sqrt(5), i.e. at densities above `negligibility_density`.
pub fn nr_mr_relation(star: &StarModel, r_tilde: f64) -> crate::bound::BoundResult {
    crate::bound::BoundResult::new(
        "scaled radius vs acceleration-term negligibility threshold",
        r_tilde / star.m_tilde().cbrt(),
        1.0 / 5.0f64.sqrt(),
    )
}

/// Density (cm^-3) above which the acceleration correction to the
/// non-relativistic mass-radius relation is negligible:
/// 8 pi 5^(3/2) / (3 lambda^3). Independent of the star mass, and identical
/// to the density of the coincident branch at the threshold mass.
pub fn negligibility_density(fermion_mass_g: f64) -> Result<f64> {
    let lambda = physcore::compton_wavelength(fermion_mass_g)?;
    Ok(8.0 * PI * 5.0f64.powf(1.5) / (3.0 * lambda.powi(3)))
}

/// Density (cm^-3) below which the non-relativistic treatment of the
/// acceleration term stays compatible with x_F < 1:
/// (5^(9/4) pi / 3 lambda^3) (M~ / M~0).
pub fn compatibility_density(star: &StarModel) -> Result<f64> {
    let lambda = physcore::compton_wavelength(star.fermion_mass_g)?;
    Ok(5.0f64.powf(2.25) * PI / (3.0 * lambda.powi(3)) * star.m_tilde() / star.m_tilde0())
}

/// Mass cap (g) of the extreme-relativistic balance: 8 M0.
pub fn er_mass_cap(star: &StarModel) -> f64 {
    8.0 * star.reference_mass_g()
}

/// Extreme-relativistic equilibrium,
/// 4 K M~^(4/3) / R~^4 - K M~^(2/3) / R~^2 = K' M~^2 / R~^4,
/// whose radius is R~ = M~^(1/3) sqrt(4 - (M~/M~0)^(2/3)). Real up to the
/// cap 8 M0, where the radius closes to zero; radicand noise within 1e-12
/// is clamped so the cap itself reports a zero radius.
pub fn er_equilibrium(star: &StarModel) -> Result<EquilibriumSolution> {
    let m_tilde = star.m_tilde();
    let u = (m_tilde / star.m_tilde0()).cbrt().powi(2);
    let mut radicand = 4.0 - u;
    if radicand.abs() < 1e-12 {
        radicand = 0.0;
    }
    let real = radicand >= 0.0;
    let mut branches = Vec::new();
    if real {
        let r_tilde = m_tilde.cbrt() * radicand.sqrt();
        branches.push(make_branch(star, "er", r_tilde)?);
    }
    Ok(EquilibriumSolution {
        regime: FermiRegime::ExtremeRelativistic,
        mass_g: star.mass_g,
        real,
        branches,
        threshold_mass_g: er_mass_cap(star),
    })
}

/// Relative residual of the extreme-relativistic balance at `r_tilde`,
/// cleared of the 1/R~^4 so the zero-radius cap stays evaluable.
pub fn er_residual(star: &StarModel, r_tilde: f64) -> f64 {
    let k = star.k_degeneracy();
    let m_tilde = star.m_tilde();
    let m13 = m_tilde.cbrt();
    let t1 = 4.0 * k * m13.powi(4);
    let t2 = -k * m13.powi(2) * r_tilde * r_tilde;
    let t3 = -star.k_gravity() * m_tilde * m_tilde;
    (t1 + t2 + t3) / t1.abs().max(t2.abs()).max(t3.abs())
}

/// Saturation-cell occupancy at this star's compatibility density; scales
/// linearly with M / M0.
pub fn occupancy_at_compatibility(star: &StarModel) -> Result<f64> {
    occupancy_from_density(compatibility_density(star)?, star.fermion_mass_g)
}

/// Occupancy estimate for a neutron star of the given mass, normalized the
/// way the published coefficient is: one pressure fermion per baryon and a
/// solar-scale reference mass.
#[derive(Debug, Clone)]
pub struct NeutronOccupancy {
    pub q: f64,
    pub coefficient_per_solar_mass: f64,
    /// Density (cm^-3) that the occupancy corresponds to.
    pub implied_density_cm3: f64,
    pub caveat: &'static str,
}

pub fn neutron_star_occupancy(mass_g: f64) -> Result<NeutronOccupancy> {
    if !(mass_g > 0.0) {
        return Err(Error::Domain(format!("star mass must be positive, got {mass_g} g")));
    }
    // Electron-star coefficient at its compatibility density, rescaled to a
    // neutron gas with one fermion per baryon and the reference mass set to
    // one solar mass.
    let wd = StarModel::white_dwarf(CODATA.m_sun)?;
    let wd_coefficient =
        occupancy_at_compatibility(&StarModel::white_dwarf(wd.reference_mass_g())?)?;
    let coefficient = 2.0 * CODATA.m_p / CODATA.m_n * wd_coefficient;
    let q = coefficient * mass_g / CODATA.m_sun;
    let lambda_n = physcore::compton_wavelength(CODATA.m_n)?;
    let implied_density = q / (9.0 * lambda_n.powi(3) / (16.0 * PI * PI));
    Ok(NeutronOccupancy {
        q,
        coefficient_per_solar_mass: coefficient,
        implied_density_cm3: implied_density,
        caveat: "constant-density Newtonian estimate with one pressure fermion per baryon and \
                 a solar-scale reference mass; general-relativistic structure is ignored",
    })
}

pub const STAR_CSV_HEADER: [&str; 7] =
    ["M_solar", "branch", "R_tilde", "R_cm", "NoverV_cm3", "Q_MA", "real_flag"];

/// Renders equilibrium solutions as CSV; non-real solutions contribute one
/// row of nan radii with the real flag cleared.
pub fn star_csv(solutions: &[EquilibriumSolution]) -> String {
    let mut cells = Vec::new();
    for sol in solutions {
        let m_solar = fmt::sig9(sol.mass_g / CODATA.m_sun);
        if sol.real {
            for b in &sol.branches {
                cells.push(vec![
                    m_solar.clone(),
                    b.label.to_string(),
                    fmt::sig9(b.r_tilde),
                    fmt::sig9(b.radius_cm),
                    fmt::sig9(b.density_cm3),
                    fmt::sig9(b.q_ma),
                    "1".to_string(),
                ]);
            }
        } else {
            cells.push(vec![
                m_solar.clone(),
                "none".to_string(),
                "nan".to_string(),
                "nan".to_string(),
                "nan".to_string(),
                "nan".to_string(),
                "0".to_string(),
            ]);
        }
    }
    fmt::csv_string(&STAR_CSV_HEADER, &cells)
}

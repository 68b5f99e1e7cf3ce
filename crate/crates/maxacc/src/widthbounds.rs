//! Decay-width caps and the particle mass bounds they imply.
//!
//! A state of mass m cannot decay faster than its minimal orthogonalization
//! time allows, which caps every total width at m/2 (natural units). Feeding
//! theoretical width formulas into that cap turns it into mass bounds for
//! the decaying states. Everything here works in GeV.

use std::path::Path;

use crate::bound::BoundResult;
use crate::physcore::{self, Particle, ParticleRegistry, CODATA};
use crate::solve;
use crate::{Error, Result};

const SQRT_2: f64 = std::f64::consts::SQRT_2;
const PI: f64 = std::f64::consts::PI;

/// Theoretical width of a decay channel as a function of the parent mass.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WidthFormula {
    /// Neutral-boson width to a lepton pair, G_F m^3 / (12 sqrt(2) pi).
    ZToLeptons,
    /// Total charged-boson width, factor times G_F m^3 / (6 sqrt(2) pi);
    /// the factor folds the hadronic channels over the e-nu one.
    WTotal { hadronic_factor: f64 },
    /// Vector-meson width to a lepton pair, 16 pi alpha^2 f / m with the
    /// effective leptonic coupling f.
    JpsiToLeptons { leptonic_factor: f64 },
    /// Scalar width to a lepton pair,
    /// G_F m_l^2 m / (4 sqrt(2) pi) (1 - 4 m_l^2/m^2)^(3/2).
    HiggsToLeptons { lepton_mass_gev: f64 },
    /// Scalar width to a Z pair, with x = 4 m_Z^2 / m^2:
    /// G_F m_Z^2 m / (16 pi sqrt(2) x) sqrt(1 - x) (3 x^2 - 4 x + 4).
    HiggsToZPair { z_mass_gev: f64 },
}

impl WidthFormula {
    /// Width (GeV) at parent mass `m_gev`. Errors when the channel is
    /// kinematically closed or the mass is non-positive.
    pub fn width(&self, m_gev: f64) -> Result<f64> {
        if !(m_gev > 0.0) {
            return Err(Error::Domain(format!("parent mass must be positive, got {m_gev} GeV")));
        }
        let gf = CODATA.g_fermi;
        match *self {
            WidthFormula::ZToLeptons => Ok(gf * m_gev.powi(3) / (12.0 * SQRT_2 * PI)),
            WidthFormula::WTotal { hadronic_factor } => {
                Ok(hadronic_factor * gf * m_gev.powi(3) / (6.0 * SQRT_2 * PI))
            }
            WidthFormula::JpsiToLeptons { leptonic_factor } => {
                let alpha = CODATA.alpha_em;
                Ok(16.0 * PI * alpha * alpha * leptonic_factor / m_gev)
            }
            WidthFormula::HiggsToLeptons { lepton_mass_gev } => {
                if m_gev < 2.0 * lepton_mass_gev {
                    return Err(Error::Domain(format!(
                        "channel closed: parent mass {m_gev} GeV below the \
                         pair threshold {} GeV",
                        2.0 * lepton_mass_gev
                    )));
                }
                let ratio = 2.0 * lepton_mass_gev / m_gev;
                let phase = (1.0 - ratio * ratio).max(0.0).powf(1.5);
                Ok(gf * lepton_mass_gev * lepton_mass_gev * m_gev / (4.0 * SQRT_2 * PI) * phase)
            }
            WidthFormula::HiggsToZPair { z_mass_gev } => {
                if m_gev < 2.0 * z_mass_gev {
                    return Err(Error::Domain(format!(
                        "channel closed: parent mass {m_gev} GeV below the \
                         pair threshold {} GeV",
                        2.0 * z_mass_gev
                    )));
                }
                let x = 4.0 * z_mass_gev * z_mass_gev / (m_gev * m_gev);
                let phase = (1.0 - x).max(0.0).sqrt();
                Ok(gf * z_mass_gev * z_mass_gev * m_gev / (16.0 * PI * SQRT_2 * x)
                    * phase
                    * (3.0 * x * x - 4.0 * x + 4.0))
            }
        }
    }
}

/// One decay process: the parent state, the constituents it is produced
/// from or decays into, and optionally a measured width and a theoretical
/// width formula.
#[derive(Debug, Clone)]
pub struct ProcessSpec {
    pub label: String,
    pub parent: Particle,
    /// Mass (GeV) of the light constituent whose rest frame the decay-time
    /// argument runs in.
    pub constituent_mass_gev: f64,
    pub measured_width_gev: Option<f64>,
    pub formula: Option<WidthFormula>,
}

impl ProcessSpec {
    /// Lorentz factor m_parent / (2 m_constituent) of each constituent in
    /// the parent rest frame.
    pub fn gamma_factor(&self) -> f64 {
        self.parent.mass_gev / (2.0 * self.constituent_mass_gev)
    }
}

/// Outcome of the half-mass width cap for one process.
#[derive(Debug, Clone)]
pub enum WidthCap {
    /// A measured width existed and was compared against the cap.
    Checked(BoundResult),
    /// No measured width; only the cap itself is reported.
    CapOnly { cap_gev: f64 },
}

/// Caps the process width at half the parent mass.
pub fn width_cap(process: &ProcessSpec) -> WidthCap {
    let cap = 0.5 * process.parent.mass_gev;
    match process.measured_width_gev {
        Some(w) => WidthCap::Checked(BoundResult::new(
            format!("width of {} vs half parent mass (GeV)", process.label),
            w,
            cap,
        )),
        None => WidthCap::CapOnly { cap_gev: cap },
    }
}

/// Root-mean-square acceleration (cm s^-2) of the constituents during the
/// decay: the maximal acceleration of the constituent scaled by the
/// width-to-mass ratio of the parent. Equivalently c Gamma / (gamma hbar)
/// with the time-dilation factor gamma of the constituent.
pub fn rms_acceleration(process: &ProcessSpec) -> Result<f64> {
    let width = process.measured_width_gev.ok_or_else(|| {
        Error::Domain(format!("process '{}' has no measured width", process.label))
    })?;
    let constituent_g = physcore::gev_to_g(process.constituent_mass_gev);
    Ok(physcore::maximal_acceleration(constituent_g)? * width / process.parent.mass_gev)
}

/// Upper mass bound (GeV) for a neutral boson whose leptonic width follows
/// the cubic formula: sqrt(6 sqrt(2) pi / G_F).
pub fn z_mass_bound() -> f64 {
    (6.0 * SQRT_2 * PI / CODATA.g_fermi).sqrt()
}

/// Upper mass bound (GeV) for the charged boson with the given total-width
/// factor: sqrt(3 sqrt(2) pi / (factor G_F)).
pub fn w_mass_bound(hadronic_factor: f64) -> f64 {
    (3.0 * SQRT_2 * PI / (hadronic_factor * CODATA.g_fermi)).sqrt()
}

/// Lower mass bound (GeV) for a vector meson with leptonic factor f:
/// sqrt(32 pi alpha^2 f). Below it the 1/m width would break the cap.
pub fn jpsi_mass_lower_bound(leptonic_factor: f64) -> f64 {
    (32.0 * PI * CODATA.alpha_em * CODATA.alpha_em * leptonic_factor).sqrt()
}

/// Mass beyond which any cubic-growth width overtakes m/2:
/// sqrt(8 sqrt(2) pi / G_F). The Z-pair window endpoint approaches this
/// from above as the threshold terms die off.
pub fn higgs_upper_asymptote() -> f64 {
    (8.0 * SQRT_2 * PI / CODATA.g_fermi).sqrt()
}

/// Allowed scalar mass window from the Z-pair channel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MassWindow {
    pub lower_gev: f64,
    pub upper_gev: f64,
}

/// Mass window inside which the Z-pair width stays under the half-mass cap:
/// from the pair threshold up to the root of Gamma(m) = m/2.
pub fn higgs_zz_window(m_z_gev: f64) -> Result<MassWindow> {
    if !(m_z_gev > 0.0) {
        return Err(Error::Domain(format!("Z mass must be positive, got {m_z_gev} GeV")));
    }
    let formula = WidthFormula::HiggsToZPair { z_mass_gev: m_z_gev };
    let lower = 2.0 * m_z_gev;
    let excess = |m: f64| formula.width(m).expect("mass above threshold") - 0.5 * m;
    let upper = solve::bisect_secant(excess, lower * (1.0 + 1e-9), 1e4, 1e-12, 300)?;
    Ok(MassWindow { lower_gev: lower, upper_gev: upper })
}

/// Electron-pair width of a scalar of mass `m_h_gev` against its half-mass
/// cap. The electron mass comes from the CODATA value.
pub fn higgs_ee_check(m_h_gev: f64) -> Result<BoundResult> {
    let m_e_gev = physcore::erg_to_gev(physcore::rest_energy(CODATA.m_e));
    let width = WidthFormula::HiggsToLeptons { lepton_mass_gev: m_e_gev }.width(m_h_gev)?;
    Ok(BoundResult::new(
        "scalar to electron pair width vs half mass cap (GeV)",
        width,
        0.5 * m_h_gev,
    ))
}

/// The processes the crate reports on out of the box.
pub fn builtin_processes(registry: &ParticleRegistry) -> Result<Vec<ProcessSpec>> {
    let electron = registry.get("electron")?.mass_gev;
    let make =
        |label: &str, parent: &str, channel: &str, formula: WidthFormula| -> Result<ProcessSpec> {
            let parent = registry.get(parent)?.clone();
            let width = parent.width(channel);
            Ok(ProcessSpec {
                label: label.to_string(),
                parent,
                constituent_mass_gev: electron,
                measured_width_gev: width,
                formula: Some(formula),
            })
        };
    Ok(vec![
        make("ee->Z0", "Z0", "ee", WidthFormula::ZToLeptons)?,
        make("W->enu", "W", "enu", WidthFormula::WTotal { hadronic_factor: 4.15 })?,
        make("ee->J/psi", "J/psi", "ee", WidthFormula::JpsiToLeptons { leptonic_factor: 0.018 })?,
    ])
}

/// Parses processes from the same key-value line format as the particle
/// registry. Keys: `label`, `parent`, `constituent` (both particle names),
/// optional `channel` (measured width looked up on the parent), optional
/// `width_gev` (direct measured width), optional `formula` with optional
/// `factor`. Formula names: z_to_leptons, w_total, jpsi_to_leptons,
/// higgs_to_ee, higgs_to_zz.
pub fn processes_from_str(text: &str, registry: &ParticleRegistry) -> Result<Vec<ProcessSpec>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut label = None;
        let mut parent_name = None;
        let mut constituent_name = None;
        let mut channel = None;
        let mut width_gev = None;
        let mut formula_name = None;
        let mut factor = None;
        for token in line.split_whitespace() {
            let (key, value) = token.split_once('=').ok_or_else(|| Error::Parse {
                line: line_no,
                msg: format!("expected key=value, got '{token}'"),
            })?;
            let parse_num = |v: &str| -> Result<f64> {
                v.parse::<f64>().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("invalid number '{v}' for key '{key}'"),
                })
            };
            match key {
                "label" => label = Some(value.to_string()),
                "parent" => parent_name = Some(value.to_string()),
                "constituent" => constituent_name = Some(value.to_string()),
                "channel" => channel = Some(value.to_string()),
                "width_gev" => width_gev = Some(parse_num(value)?),
                "formula" => formula_name = Some(value.to_string()),
                "factor" => factor = Some(parse_num(value)?),
                _ => {
                    return Err(Error::Parse { line: line_no, msg: format!("unknown key '{key}'") })
                }
            }
        }
        let require = |what: &str, v: Option<String>| {
            v.ok_or_else(|| Error::Parse {
                line: line_no,
                msg: format!("missing required key '{what}'"),
            })
        };
        let label = require("label", label)?;
        let parent = registry.get(&require("parent", parent_name)?)?.clone();
        let constituent = registry.get(&require("constituent", constituent_name)?)?;
        let measured = match (width_gev, channel) {
            (Some(w), _) => Some(w),
            (None, Some(ch)) => Some(parent.width(&ch).ok_or_else(|| Error::Parse {
                line: line_no,
                msg: format!("particle '{}' has no width channel '{ch}'", parent.name),
            })?),
            (None, None) => None,
        };
        let formula = match formula_name.as_deref() {
            None => None,
            Some("z_to_leptons") => Some(WidthFormula::ZToLeptons),
            Some("w_total") => {
                Some(WidthFormula::WTotal { hadronic_factor: factor.unwrap_or(4.15) })
            }
            Some("jpsi_to_leptons") => {
                Some(WidthFormula::JpsiToLeptons { leptonic_factor: factor.unwrap_or(0.018) })
            }
            Some("higgs_to_ee") => Some(WidthFormula::HiggsToLeptons {
                lepton_mass_gev: registry.get("electron")?.mass_gev,
            }),
            Some("higgs_to_zz") => {
                Some(WidthFormula::HiggsToZPair { z_mass_gev: registry.get("Z0")?.mass_gev })
            }
            Some(other) => {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("unknown formula '{other}'"),
                })
            }
        };
        out.push(ProcessSpec {
            label,
            parent,
            constituent_mass_gev: constituent.mass_gev,
            measured_width_gev: measured,
            formula,
        });
    }
    Ok(out)
}

pub fn processes_from_file(path: &Path, registry: &ParticleRegistry) -> Result<Vec<ProcessSpec>> {
    let text = std::fs::read_to_string(path)?;
    processes_from_str(&text, registry)
}

//! Physical constants (CGS-Gaussian), unit conversions, and the particle
//! registry consumed by every other module.

use std::collections::BTreeMap;
use std::path::Path;

use crate::{Error, Result};

/// CODATA-2018 constants in CGS-Gaussian units, plus the handful of derived
/// combinations the rest of the crate needs.
#[derive(Debug, Clone, Copy)]
pub struct PhysicalConstants {
    /// Speed of light c (cm s^-1).
    pub c: f64,
    /// Planck constant h (erg s).
    pub h: f64,
    /// Reduced Planck constant hbar (erg s).
    pub hbar: f64,
    /// Elementary charge e (esu).
    pub e_esu: f64,
    /// Electron mass (g).
    pub m_e: f64,
    /// Proton mass (g).
    pub m_p: f64,
    /// Neutron mass (g).
    pub m_n: f64,
    /// Newtonian gravitational constant G (cm^3 g^-1 s^-2).
    pub grav: f64,
    /// Boltzmann constant k_B (erg K^-1).
    pub k_b: f64,
    /// Bohr magneton e hbar / (2 m_e c) (erg G^-1).
    pub mu_b: f64,
    /// Fermi coupling constant G_F (GeV^-2).
    pub g_fermi: f64,
    /// Fine-structure constant (dimensionless).
    pub alpha_em: f64,
    /// Solar mass (g).
    pub m_sun: f64,
    /// Energy conversion (erg per GeV).
    pub erg_per_gev: f64,
    /// Electric-field conversion: one statvolt cm^-1 expressed in N C^-1.
    pub n_per_c_per_statvolt_cm: f64,
}

impl PhysicalConstants {
    pub const fn codata2018() -> Self {
        let c = 2.99792458e10;
        let h = 6.62607015e-27;
        let hbar = h / (2.0 * std::f64::consts::PI);
        let e_esu = 1.602176634e-19 * 2.99792458e9;
        let m_e = 9.1093837015e-28;
        PhysicalConstants {
            c,
            h,
            hbar,
            e_esu,
            m_e,
            m_p: 1.67262192369e-24,
            m_n: 1.67492749804e-24,
            grav: 6.67430e-8,
            k_b: 1.380649e-16,
            mu_b: e_esu * hbar / (2.0 * m_e * c),
            g_fermi: 1.1663787e-5,
            alpha_em: 7.2973525693e-3,
            m_sun: 1.989e33,
            erg_per_gev: 1.602176634e-3,
            n_per_c_per_statvolt_cm: 2.99792458e4,
        }
    }
}

pub const CODATA: PhysicalConstants = PhysicalConstants::codata2018();

/// Rest energy m c^2 (erg) of a mass given in grams.
pub fn rest_energy(mass_g: f64) -> f64 {
    mass_g * CODATA.c * CODATA.c
}

/// Maximal proper acceleration 2 m c^3 / hbar (cm s^-2) for a particle of
/// mass `mass_g` grams.
pub fn maximal_acceleration(mass_g: f64) -> Result<f64> {
    if !(mass_g > 0.0) {
        return Err(Error::Domain(format!("mass must be positive, got {mass_g} g")));
    }
    Ok(2.0 * CODATA.c * rest_energy(mass_g) / CODATA.hbar)
}

/// Compton wavelength h / (m c) (cm).
pub fn compton_wavelength(mass_g: f64) -> Result<f64> {
    if !(mass_g > 0.0) {
        return Err(Error::Domain(format!("mass must be positive, got {mass_g} g")));
    }
    Ok(CODATA.h / (mass_g * CODATA.c))
}

/// Thermal de Broglie wavelength sqrt(2 pi hbar^2 / (m k_B T)) (cm).
pub fn thermal_wavelength(mass_g: f64, temperature_k: f64) -> Result<f64> {
    if !(mass_g > 0.0) {
        return Err(Error::Domain(format!("mass must be positive, got {mass_g} g")));
    }
    if !(temperature_k > 0.0) {
        return Err(Error::Domain(format!("temperature must be positive, got {temperature_k} K")));
    }
    Ok((2.0 * std::f64::consts::PI * CODATA.hbar * CODATA.hbar
        / (mass_g * CODATA.k_b * temperature_k))
        .sqrt())
}

/// Quantum-degeneracy indicator (N/V) lambda_T^3 (dimensionless); a gas is
/// degenerate when this is much greater than one.
pub fn degeneracy_parameter(density_cm3: f64, mass_g: f64, temperature_k: f64) -> Result<f64> {
    if !(density_cm3 > 0.0) {
        return Err(Error::Domain(format!(
            "number density must be positive, got {density_cm3} cm^-3"
        )));
    }
    let lam = thermal_wavelength(mass_g, temperature_k)?;
    Ok(density_cm3 * lam * lam * lam)
}

pub fn gev_to_erg(e_gev: f64) -> f64 {
    e_gev * CODATA.erg_per_gev
}

pub fn erg_to_gev(e_erg: f64) -> f64 {
    e_erg / CODATA.erg_per_gev
}

/// Mass conversion GeV/c^2 to grams.
pub fn gev_to_g(m_gev: f64) -> f64 {
    gev_to_erg(m_gev) / (CODATA.c * CODATA.c)
}

pub fn statvolt_cm_to_n_per_c(e_statvolt_cm: f64) -> f64 {
    e_statvolt_cm * CODATA.n_per_c_per_statvolt_cm
}

pub fn n_per_c_to_statvolt_cm(e_n_per_c: f64) -> f64 {
    e_n_per_c / CODATA.n_per_c_per_statvolt_cm
}

/// One particle species: name, mass in GeV, charge in units of e, and any
/// number of named partial widths in GeV.
#[derive(Debug, Clone, PartialEq)]
pub struct Particle {
    pub name: String,
    pub mass_gev: f64,
    pub charge: f64,
    pub widths: BTreeMap<String, f64>,
}

impl Particle {
    pub fn new(name: impl Into<String>, mass_gev: f64, charge: f64) -> Self {
        Particle { name: name.into(), mass_gev, charge, widths: BTreeMap::new() }
    }

    pub fn with_width(mut self, channel: impl Into<String>, width_gev: f64) -> Self {
        self.widths.insert(channel.into(), width_gev);
        self
    }

    pub fn mass_g(&self) -> f64 {
        gev_to_g(self.mass_gev)
    }

    pub fn width(&self, channel: &str) -> Option<f64> {
        self.widths.get(channel).copied()
    }
}

/// Particle table keyed by name. Built-in entries cover everything the crate
/// computes with; extra species can be merged in from a key-value file.
#[derive(Debug, Clone)]
pub struct ParticleRegistry {
    particles: BTreeMap<String, Particle>,
}

impl ParticleRegistry {
    /// Registry with the built-in species: e, p, n at CODATA masses and the
    /// boson/meson entries at their published masses and partial widths.
    pub fn builtin() -> Self {
        let mut particles = BTreeMap::new();
        let mut put = |p: Particle| {
            particles.insert(p.name.clone(), p);
        };
        put(Particle::new("electron", erg_to_gev(rest_energy(CODATA.m_e)), -1.0));
        put(Particle::new("proton", erg_to_gev(rest_energy(CODATA.m_p)), 1.0));
        put(Particle::new("neutron", erg_to_gev(rest_energy(CODATA.m_n)), 0.0));
        put(Particle::new("Z0", 91.188, 0.0).with_width("ee", 0.08391));
        put(Particle::new("W", 80.419, 1.0).with_width("enu", 0.22599));
        put(Particle::new("J/psi", 3.09687, 0.0).with_width("ee", 5.2e-6));
        ParticleRegistry { particles }
    }

    pub fn get(&self, name: &str) -> Result<&Particle> {
        self.particles.get(name).ok_or_else(|| Error::UnknownParticle(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.particles.keys().map(|s| s.as_str())
    }

    /// Merges particles parsed from `text` over the current table. One
    /// particle per line: whitespace-separated `key=value` pairs with
    /// required `name` and `mass_gev`, optional `charge` (default 0), and
    /// any number of `width.<channel>` entries. `#` starts a comment.
    pub fn merge_from_str(&mut self, text: &str) -> Result<()> {
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut name: Option<String> = None;
            let mut mass_gev: Option<f64> = None;
            let mut charge = 0.0;
            let mut widths = BTreeMap::new();
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
                    "name" => name = Some(value.to_string()),
                    "mass_gev" => mass_gev = Some(parse_num(value)?),
                    "charge" => charge = parse_num(value)?,
                    _ => {
                        if let Some(channel) = key.strip_prefix("width.") {
                            widths.insert(channel.to_string(), parse_num(value)?);
                        } else {
                            return Err(Error::Parse {
                                line: line_no,
                                msg: format!("unknown key '{key}'"),
                            });
                        }
                    }
                }
            }
            let name = name.ok_or_else(|| Error::Parse {
                line: line_no,
                msg: "missing required key 'name'".to_string(),
            })?;
            let mass_gev = mass_gev.ok_or_else(|| Error::Parse {
                line: line_no,
                msg: format!("particle '{name}' is missing required key 'mass_gev'"),
            })?;
            if !(mass_gev > 0.0) {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("particle '{name}' has non-positive mass {mass_gev}"),
                });
            }
            self.particles.insert(name.clone(), Particle { name, mass_gev, charge, widths });
        }
        Ok(())
    }

    pub fn merge_from_file(&mut self, path: &Path) -> Result<()> {
        let text = std::fs::read_to_string(path)?;
        self.merge_from_str(&text)
    }
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn constants_have_plausible_magnitudes() {
        let k = CODATA;
        assert!(k.c > 2.9e10 && k.c < 3.1e10);
        assert!(k.h > 6.0e-27 && k.h < 7.0e-27);
        assert!(k.hbar > 1.0e-27 && k.hbar < 1.1e-27);
        assert!(k.e_esu > 4.7e-10 && k.e_esu < 4.9e-10);
        assert!(k.m_e > 9.0e-28 && k.m_e < 9.2e-28);
        assert!(k.m_p > 1.6e-24 && k.m_p < 1.7e-24);
        assert!(k.m_n > k.m_p);
        assert!(k.grav > 6.6e-8 && k.grav < 6.7e-8);
        assert!(k.k_b > 1.3e-16 && k.k_b < 1.4e-16);
        assert!(k.mu_b > 9.2e-21 && k.mu_b < 9.3e-21);
        assert!(k.g_fermi > 1.1e-5 && k.g_fermi < 1.2e-5);
        assert!(k.alpha_em > 7.2e-3 && k.alpha_em < 7.3e-3);
        assert!(k.m_sun > 1.9e33 && k.m_sun < 2.0e33);
        assert!(k.erg_per_gev > 1.6e-3 && k.erg_per_gev < 1.61e-3);
        assert!(k.n_per_c_per_statvolt_cm > 2.99e4 && k.n_per_c_per_statvolt_cm < 3.0e4);
    }

    #[test]
    fn derived_constants_match_reference_values() {
        assert!(rel(CODATA.hbar, 1.0545718176461564e-27) < 1e-12);
        assert!(rel(CODATA.e_esu, 4.8032047125702637e-10) < 1e-12);
        // Bohr magneton against the independently published value.
        assert!(rel(CODATA.mu_b, 9.2740100783e-21) < 1e-10);
        assert!(rel(CODATA.mu_b, 9.2740100783621638e-21) < 1e-12);
    }

    #[test]
    fn electron_maximal_acceleration() {
        let a = maximal_acceleration(CODATA.m_e).unwrap();
        assert!(rel(a, 4.6548419437538492e31) < 1e-12);
        // Within 2% of the round published figure.
        assert!(rel(a, 4.7e31) < 0.02);
    }

    #[test]
    fn proton_maximal_acceleration() {
        let a = maximal_acceleration(CODATA.m_p).unwrap();
        assert!(rel(a, 8.5470004794642825e34) < 1e-12);
    }

    #[test]
    fn maximal_acceleration_scales_linearly_in_mass() {
        let a1 = maximal_acceleration(CODATA.m_e).unwrap();
        let a2 = maximal_acceleration(2.0 * CODATA.m_e).unwrap();
        // Doubling the mass is a power-of-two scaling, exact in binary.
        assert_eq!(a2, 2.0 * a1);
    }

    #[test]
    fn compton_wavelengths() {
        assert!(rel(compton_wavelength(CODATA.m_e).unwrap(), 2.4263102386830924e-10) < 1e-12);
        assert!(rel(compton_wavelength(CODATA.m_n).unwrap(), 1.3195909058097331e-13) < 1e-12);
    }

    #[test]
    fn acceleration_wavelength_product_is_four_pi_c_squared() {
        // 2mc^3/hbar * h/(mc) = 4 pi c^2 independent of the mass.
        for m in [CODATA.m_e, CODATA.m_p, CODATA.m_n, 1e-20] {
            let prod = maximal_acceleration(m).unwrap() * compton_wavelength(m).unwrap();
            let four_pi_c2 = 4.0 * std::f64::consts::PI * CODATA.c * CODATA.c;
            assert!(rel(prod, four_pi_c2) < 1e-12);
        }
    }

    #[test]
    fn thermal_wavelength_golden_and_scaling() {
        let lam = thermal_wavelength(CODATA.m_e, 300.0).unwrap();
        assert!(rel(lam, 4.3034754395952077e-7) < 1e-12);
        // lambda_T ~ T^-1/2.
        let lam4 = thermal_wavelength(CODATA.m_e, 1200.0).unwrap();
        assert!(rel(lam4, lam / 2.0) < 1e-12);
    }

    #[test]
    fn dense_cold_electron_gas_is_degenerate() {
        let q = degeneracy_parameter(4.6e29, CODATA.m_e, 1e7).unwrap();
        assert!(rel(q, 6024.1766717975144) < 1e-12);
        assert!(q > 1.0e3);
    }

    #[test]
    fn nonpositive_arguments_are_domain_errors() {
        assert!(matches!(maximal_acceleration(0.0), Err(Error::Domain(_))));
        assert!(matches!(maximal_acceleration(-1.0), Err(Error::Domain(_))));
        assert!(matches!(compton_wavelength(0.0), Err(Error::Domain(_))));
        assert!(matches!(thermal_wavelength(CODATA.m_e, 0.0), Err(Error::Domain(_))));
        assert!(matches!(thermal_wavelength(CODATA.m_e, -5.0), Err(Error::Domain(_))));
        assert!(matches!(degeneracy_parameter(0.0, CODATA.m_e, 1.0), Err(Error::Domain(_))));
        assert!(matches!(maximal_acceleration(f64::NAN), Err(Error::Domain(_))));
    }

    #[test]
    fn energy_conversions_roundtrip() {
        let e = 0.511e-3;
        assert!(rel(erg_to_gev(gev_to_erg(e)), e) < 1e-15);
        let f = 1.0;
        assert!(rel(n_per_c_to_statvolt_cm(statvolt_cm_to_n_per_c(f)), f) < 1e-15);
        // Electron rest energy in GeV.
        assert!(rel(erg_to_gev(rest_energy(CODATA.m_e)), 5.1099894999616415e-4) < 1e-12);
    }

    #[test]
    fn builtin_registry_contents() {
        let reg = ParticleRegistry::builtin();
        for name in ["electron", "proton", "neutron", "Z0", "W", "J/psi"] {
            assert!(reg.get(name).is_ok(), "missing builtin particle {name}");
        }
        let z = reg.get("Z0").unwrap();
        assert_eq!(z.mass_gev, 91.188);
        assert_eq!(z.width("ee"), Some(0.08391));
        let w = reg.get("W").unwrap();
        assert_eq!(w.mass_gev, 80.419);
        assert_eq!(w.width("enu"), Some(0.22599));
        let psi = reg.get("J/psi").unwrap();
        assert_eq!(psi.mass_gev, 3.09687);
        assert_eq!(psi.width("ee"), Some(5.2e-6));
        let e = reg.get("electron").unwrap();
        assert!(rel(e.mass_g(), CODATA.m_e) < 1e-14);
        assert_eq!(e.charge, -1.0);
        assert!(matches!(reg.get("axion"), Err(Error::UnknownParticle(_))));
    }

    #[test]
    fn registry_merge_from_text() {
        let mut reg = ParticleRegistry::builtin();
        reg.merge_from_str(
            "# extra species\n\
             name=muon mass_gev=0.1056583745 charge=-1\n\
             \n\
             name=Z0 mass_gev=91.1876 width.ee=0.0839 width.mumu=0.0839 # override\n",
        )
        .unwrap();
        let mu = reg.get("muon").unwrap();
        assert_eq!(mu.mass_gev, 0.1056583745);
        assert_eq!(mu.charge, -1.0);
        let z = reg.get("Z0").unwrap();
        assert_eq!(z.mass_gev, 91.1876);
        assert_eq!(z.width("mumu"), Some(0.0839));
    }

    #[test]
    fn registry_rejects_malformed_records() {
        let mut reg = ParticleRegistry::builtin();
        let bad = [
            "mass_gev=1.0",                 // missing name
            "name=x",                       // missing mass
            "name=x mass_gev=oops",         // bad number
            "name=x mass_gev=-2.0",         // non-positive mass
            "name=x mass_gev=1.0 spin=0.5", // unknown key
            "name=x mass_gev=1.0 width.ee", // not key=value
        ];
        for text in bad {
            assert!(
                matches!(reg.merge_from_str(text), Err(Error::Parse { .. })),
                "accepted malformed record: {text}"
            );
        }
        // Error reports the offending line number.
        match reg.merge_from_str("name=ok mass_gev=1.0\nname=bad mass_gev=zzz") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }
}

//! Command-line front end: acceleration limits, frame transforms, the
//! superconducting-sphere field grid, decay-width caps, compact-star
//! equilibria, and the reproduction report.
//!
//! Exit codes: 0 success, 1 domain error (one line on stderr), 2 bad flags.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use maxacc::config::Config;
use maxacc::fmt::sig9;
use maxacc::kinematics::{self, Vec3};
use maxacc::londonsphere::{self, SphereModel};
use maxacc::physcore::{self, ParticleRegistry, CODATA};
use maxacc::report;
use maxacc::stellar::{self, EquilibriumSolution, FermiRegime, StarModel};
use maxacc::widthbounds::{self, ProcessSpec, WidthCap};
use maxacc::Result;

#[derive(Parser)]
#[command(name = "ma", version, about = "proper-acceleration bounds and their consequences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the maximal proper acceleration of a particle.
    Limit {
        #[arg(long)]
        particle: String,
    },
    /// Transform a proper acceleration into the lab frame.
    Transform {
        /// Proper acceleration, cm s^-2, as "ax,ay,az".
        #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
        a: Triple,
        /// Boost velocity, cm s^-1, as "vx,vy,vz".
        #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
        v: Triple,
    },
    /// Sample the field and flow inside a superconducting sphere.
    Sphere {
        /// Sphere radius in cm (defaults to the configured model).
        #[arg(long)]
        radius: Option<f64>,
        /// Applied field in gauss (defaults to the configured model).
        #[arg(long)]
        b0: Option<f64>,
        /// Depth x angle sample counts.
        #[arg(long, value_parser = parse_grid, default_value = "100x100")]
        grid: Grid,
        /// CSV destination; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check decay widths against the half-mass cap.
    Widths {
        /// Only this process label.
        #[arg(long)]
        process: Option<String>,
        /// Extra process definitions.
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Solve compact-star equilibria with the acceleration correction.
    Star {
        /// Star mass in solar masses.
        #[arg(
            long,
            required_unless_present = "sweep",
            conflicts_with = "sweep",
            allow_hyphen_values = true
        )]
        mass: Option<f64>,
        #[arg(long, value_enum, default_value_t = RegimeArg::Nr)]
        regime: RegimeArg,
        #[arg(long, value_enum, default_value_t = FermionArg::Electron)]
        fermion: FermionArg,
        /// Mass range "M1:M2:STEP" in solar masses.
        #[arg(long, value_parser = parse_sweep)]
        sweep: Option<Sweep>,
        /// CSV destination; stdout when omitted (sweeps always emit CSV).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute every published value and compare.
    Report {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug)]
struct Triple([f64; 3]);

fn parse_triple(s: &str) -> std::result::Result<Triple, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected three comma-separated numbers, got {s:?}"));
    }
    let mut out = [0.0; 3];
    for (slot, part) in out.iter_mut().zip(&parts) {
        *slot = part.trim().parse::<f64>().map_err(|e| format!("bad component {part:?}: {e}"))?;
    }
    Ok(Triple(out))
}

#[derive(Clone, Copy, Debug)]
struct Grid {
    depth: usize,
    theta: usize,
}

fn parse_grid(s: &str) -> std::result::Result<Grid, String> {
    let (d, t) = s.split_once(['x', 'X']).ok_or_else(|| format!("expected NxM, got {s:?}"))?;
    let depth = d.trim().parse::<usize>().map_err(|e| format!("bad depth count: {e}"))?;
    let theta = t.trim().parse::<usize>().map_err(|e| format!("bad angle count: {e}"))?;
    if depth < 2 || theta < 2 {
        return Err("grid needs at least 2 samples per axis".to_string());
    }
    Ok(Grid { depth, theta })
}

#[derive(Clone, Copy, Debug)]
struct Sweep {
    lo: f64,
    hi: f64,
    step: f64,
}

fn parse_sweep(s: &str) -> std::result::Result<Sweep, String> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("expected M1:M2:STEP, got {s:?}"));
    }
    let nums: std::result::Result<Vec<f64>, _> =
        parts.iter().map(|p| p.trim().parse::<f64>()).collect();
    let nums = nums.map_err(|e| format!("bad number in sweep: {e}"))?;
    let (lo, hi, step) = (nums[0], nums[1], nums[2]);
    if !(lo > 0.0 && hi >= lo && step > 0.0) {
        return Err("sweep needs 0 < M1 <= M2 and STEP > 0".to_string());
    }
    Ok(Sweep { lo, hi, step })
}

impl Sweep {
    fn masses(&self) -> Vec<f64> {
        let mut out = Vec::new();
        let mut k = 0usize;
        loop {
            let m = self.lo + self.step * k as f64;
            if m > self.hi * (1.0 + 1e-12) {
                break;
            }
            out.push(m);
            k += 1;
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RegimeArg {
    Nr,
    Er,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FermionArg {
    Electron,
    Neutron,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    let config = Config::from_env()?;
    match cli.command {
        Command::Limit { particle } => cmd_limit(&config, &particle),
        Command::Transform { a, v } => cmd_transform(a, v),
        Command::Sphere { radius, b0, grid, out } => cmd_sphere(&config, radius, b0, grid, out),
        Command::Widths { process, table } => cmd_widths(&config, process, table),
        Command::Star { mass, regime, fermion, sweep, out } => {
            cmd_star(mass, regime, fermion, sweep, out)
        }
        Command::Report { json } => {
            let rows = report::run_report();
            if json {
                print!("{}", report::render_json(&rows));
            } else {
                print!("{}", report::render_text(&rows));
            }
            Ok(())
        }
    }
}

fn load_registry(config: &Config) -> Result<ParticleRegistry> {
    let mut registry = ParticleRegistry::builtin();
    if let Some(path) = &config.registry_path {
        registry.merge_from_file(path)?;
    }
    Ok(registry)
}

fn cmd_limit(config: &Config, name: &str) -> Result<()> {
    let registry = load_registry(config)?;
    let particle = registry.get(name)?;
    let limit = physcore::maximal_acceleration(particle.mass_g())?;
    println!(
        "{}: mass {} GeV, maximal acceleration {} cm s^-2",
        particle.name,
        sig9(particle.mass_gev),
        sig9(limit)
    );
    Ok(())
}

fn cmd_transform(a: Triple, v: Triple) -> Result<()> {
    let a = Vec3::new(a.0[0], a.0[1], a.0[2]);
    let v = Vec3::new(v.0[0], v.0[1], v.0[2]);
    let lab = kinematics::transform_acceleration(a, v)?;
    let magnitude = kinematics::transformed_magnitude(a, v)?;
    println!("proper acceleration: ({}, {}, {}) cm s^-2", sig9(a.x), sig9(a.y), sig9(a.z));
    println!("boost velocity:      ({}, {}, {}) cm s^-1", sig9(v.x), sig9(v.y), sig9(v.z));
    println!("lab acceleration:    ({}, {}, {}) cm s^-2", sig9(lab.x), sig9(lab.y), sig9(lab.z));
    println!("lab magnitude:       {} cm s^-2", sig9(magnitude));
    Ok(())
}

fn cmd_sphere(
    config: &Config,
    radius: Option<f64>,
    b0: Option<f64>,
    grid: Grid,
    out: Option<PathBuf>,
) -> Result<()> {
    let base = config.sphere_model()?;
    let model = SphereModel::new(
        radius.unwrap_or(base.radius_cm),
        b0.unwrap_or(base.b0_gauss),
        base.n_cm3,
        base.b_c_gauss,
        base.epsilon_f_erg,
        base.temperature_k,
    )?;
    let rows = londonsphere::grid_sweep(&model, grid.depth, grid.theta)?;
    let csv = londonsphere::grid_csv(&rows);
    match out {
        Some(path) => {
            std::fs::write(&path, csv)?;
            println!(
                "wrote {} samples to {} (penetration depth {} cm, surface speed {} cm s^-1)",
                rows.len(),
                path.display(),
                sig9(model.lambda_london()),
                sig9(model.surface_speed())
            );
        }
        None => print!("{csv}"),
    }
    Ok(())
}

fn describe_process(process: &ProcessSpec) -> String {
    let mut line = format!(
        "{}: parent {} ({} GeV)",
        process.label,
        process.parent.name,
        sig9(process.parent.mass_gev)
    );
    match widthbounds::width_cap(process) {
        WidthCap::Checked(check) => {
            line.push_str(&format!(
                ", width {} GeV, cap {} GeV, within cap: {}",
                sig9(check.value),
                sig9(check.bound),
                if check.satisfied { "yes" } else { "no" }
            ));
            if let Ok(a) = widthbounds::rms_acceleration(process) {
                line.push_str(&format!(", rms acceleration {} cm s^-2", sig9(a)));
            }
        }
        WidthCap::CapOnly { cap_gev } => {
            line.push_str(&format!(", cap {} GeV, no measured width", sig9(cap_gev)));
        }
    }
    line
}

fn cmd_widths(config: &Config, filter: Option<String>, table: Option<PathBuf>) -> Result<()> {
    let registry = load_registry(config)?;
    let mut processes = widthbounds::builtin_processes(&registry)?;
    let table_path = table.or_else(|| config.process_table_path.clone());
    if let Some(path) = table_path {
        processes.extend(widthbounds::processes_from_file(&path, &registry)?);
    }
    if let Some(label) = filter {
        let process = processes
            .iter()
            .find(|p| p.label == label)
            .ok_or(maxacc::Error::UnknownProcess(label))?;
        println!("{}", describe_process(process));
    } else {
        for process in &processes {
            println!("{}", describe_process(process));
        }
    }
    Ok(())
}

fn star_model(mass_solar: f64, fermion: FermionArg) -> Result<StarModel> {
    let mass_g = mass_solar * CODATA.m_sun;
    match fermion {
        FermionArg::Electron => StarModel::white_dwarf(mass_g),
        FermionArg::Neutron => StarModel::neutron_star(mass_g),
    }
}

fn solve(star: &StarModel, regime: RegimeArg) -> Result<EquilibriumSolution> {
    match regime {
        RegimeArg::Nr => stellar::nr_equilibrium(star),
        RegimeArg::Er => stellar::er_equilibrium(star),
    }
}

fn print_solution(star: &StarModel, sol: &EquilibriumSolution) {
    println!(
        "star: {} M_sun, fermion {}, regime {}",
        sig9(sol.mass_g / CODATA.m_sun),
        star.fermion_label,
        match sol.regime {
            FermiRegime::NonRelativistic => "nr",
            FermiRegime::ExtremeRelativistic => "er",
            FermiRegime::Exact => "exact",
        }
    );
    let side = match sol.regime {
        FermiRegime::NonRelativistic => "real at or above it",
        _ => "real at or below it",
    };
    println!(
        "threshold mass: {} M0 = {} M_sun ({})",
        sig9(sol.threshold_mass_g / star.reference_mass_g()),
        sig9(sol.threshold_mass_g / CODATA.m_sun),
        side
    );
    if sol.real {
        for b in &sol.branches {
            println!(
                "branch {}: R~ {} , R {} cm, N/V {} cm^-3, occupancy {}",
                b.label,
                sig9(b.r_tilde),
                sig9(b.radius_cm),
                sig9(b.density_cm3),
                sig9(b.q_ma)
            );
        }
    } else {
        println!("equilibrium: not-real at this mass");
    }
}

fn cmd_star(
    mass: Option<f64>,
    regime: RegimeArg,
    fermion: FermionArg,
    sweep: Option<Sweep>,
    out: Option<PathBuf>,
) -> Result<()> {
    let solutions: Vec<EquilibriumSolution> = match sweep {
        Some(sweep) => {
            let mut sols = Vec::new();
            for m in sweep.masses() {
                let star = star_model(m, fermion)?;
                sols.push(solve(&star, regime)?);
            }
            sols
        }
        None => {
            let m = mass.expect("clap enforces mass without sweep");
            let star = star_model(m, fermion)?;
            let sol = solve(&star, regime)?;
            if out.is_none() {
                print_solution(&star, &sol);
                return Ok(());
            }
            vec![sol]
        }
    };
    let csv = stellar::star_csv(&solutions);
    match out {
        Some(path) => {
            std::fs::write(&path, csv)?;
            println!("wrote {} solutions to {}", solutions.len(), path.display());
        }
        None => print!("{csv}"),
    }
    Ok(())
}

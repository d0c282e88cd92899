//! Command-line surface: parse 1-form inputs, run the reduction/verdict
//! pipeline, emit JSON reports and CSV trajectory data, and run the symbolic
//! identity suite.
//!
//! Exit codes for `analyze`: 0 compatible, 2 incompatible, 3 inconclusive,
//! 1 error. Configuration follows flags > environment (PFAFF_*) > defaults.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;

use pfaff::blowup::{blowup_at_origin, Chart};
use pfaff::forms::{HoloOneForm, RealPForm};
use pfaff::holonomy::{orbit_classify, resonant_holonomy, saddle_node_strong_holonomy};
use pfaff::logforms::{
    build_logarithmic, closedness_check, induced_holomorphic_form, magnitude_first_integral,
    Residue,
};
use pfaff::parser::{parse_oneform, parse_poly, ParsedForm};
use pfaff::poly::Poly;
use pfaff::report::{analyze_form, analyze_source, to_json, AnalysisStatus, ConfigSnapshot};
use pfaff::rolle::{levi_integrability_check, SectionAxis, TransversalFoliation};
use pfaff::scalar::GaussianRational;
use pfaff::Ring;

#[derive(Parser)]
#[command(
    name = "pfaff",
    version,
    about = "Analyze germs of singular holomorphic foliations in the complex plane"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonOpts {
    /// Maximum blow-up depth for the reduction loop.
    #[arg(long, env = "PFAFF_MAX_DEPTH", default_value_t = 20)]
    max_depth: usize,
    /// Relative tolerance of the adaptive integrator.
    #[arg(long, env = "PFAFF_TOL", default_value_t = 1e-10)]
    tol: f64,
    /// Override of the holonomy validity radius.
    #[arg(long, env = "PFAFF_RADIUS")]
    radius: Option<f64>,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce, classify and decide Rolle-tangency compatibility of a 1-form.
    Analyze {
        /// The 1-form, e.g. "x*(1+(1/2)*y)*dy - y^2*dx".
        form: Option<String>,
        #[command(flatten)]
        common: CommonOpts,
        /// Write the JSON report here instead of stdout.
        #[arg(long, value_name = "out.json")]
        json: Option<PathBuf>,
        /// Attach numerical evidence blocks to the report.
        #[arg(long)]
        evidence: bool,
        /// Read a logarithmic model from a JSON file of factor/residue
        /// pairs: [{"factor": "x", "residue": "1"}, ...].
        #[arg(long, value_name = "factors.json")]
        log_input: Option<PathBuf>,
    },
    /// Holonomy maps of the normal forms: derivative at 0 and orbit class.
    Holonomy {
        /// Saddle-node invariant k (strong holonomy), or resonance index k.
        #[arg(short, long)]
        k: u32,
        /// Weak multiplier mu, e.g. "1/2" or "i".
        #[arg(short, long, default_value = "0")]
        mu: String,
        /// Resonance numerator p (resonant holonomy when given with q).
        #[arg(short, long)]
        p: Option<u64>,
        /// Resonance denominator q.
        #[arg(short, long)]
        q: Option<u64>,
        /// Orbit seed, real part.
        #[arg(long, default_value_t = 0.05)]
        seed_re: f64,
        /// Orbit seed, imaginary part.
        #[arg(long, default_value_t = 0.0)]
        seed_im: f64,
        #[arg(long, default_value_t = 200)]
        iters: usize,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Write trajectory CSV files.
    Trace {
        #[command(subcommand)]
        kind: TraceKind,
    },
    /// Run the symbolic identity suite over a fixture file (or the built-in
    /// fixtures when no file is given).
    Check {
        /// JSON fixture file; see the README for the entry formats.
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum TraceKind {
    /// Iterates of a holonomy map: columns n, re, im, modulus.
    HolonomyOrbit {
        #[arg(short, long)]
        k: u32,
        #[arg(short, long, default_value = "0")]
        mu: String,
        #[arg(short, long)]
        p: Option<u64>,
        #[arg(short, long)]
        q: Option<u64>,
        #[arg(long, default_value_t = 0.05)]
        seed_re: f64,
        #[arg(long, default_value_t = 0.0)]
        seed_im: f64,
        #[arg(short, long, default_value_t = 200)]
        n: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// A leaf of the transversal section foliation: columns s, re, im,
    /// modulus.
    TransversalLeaf {
        /// Complex parameter alpha, e.g. "1+i".
        #[arg(long, default_value = "1")]
        alpha: String,
        #[arg(long, default_value_t = 0.3)]
        seed_re: f64,
        #[arg(long, default_value_t = 0.0)]
        seed_im: f64,
        /// Total arc length to trace (split between both directions).
        #[arg(long, default_value_t = 6.0)]
        arc: f64,
        #[arg(long, default_value_t = 2000)]
        points: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Ray-crossing counts of section leaves over a sweep of seeds:
    /// columns seed_re, seed_im, ray_angle, count.
    CrossingScan {
        /// Complex parameter alpha of the section family, e.g. "1+i".
        #[arg(long, default_value = "1")]
        alpha: String,
        /// Seeds are placed on this circle.
        #[arg(long, default_value_t = 0.3)]
        seed_radius: f64,
        #[arg(long, default_value_t = 8)]
        seeds: usize,
        #[arg(long, default_value_t = 0.0)]
        ray_angle: f64,
        #[arg(long, default_value_t = 1e-4)]
        r_min: f64,
        #[arg(long, default_value_t = 0.5)]
        r_max: f64,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Profile polyline of a level set |x|^l1·|y|^l2 = c: columns t, abs_y,
    /// abs_x.
    LevelSet {
        /// Factors JSON: [{"factor": "x", "residue": "1"}, ...]; only the
        /// coordinate factors x and y are traceable.
        #[arg(long)]
        factors: PathBuf,
        #[arg(short, long, default_value_t = 1.0)]
        c: f64,
        #[arg(long, default_value_t = 0.01)]
        t_min: f64,
        #[arg(long, default_value_t = 1.0)]
        t_max: f64,
        #[arg(long, default_value_t = 200)]
        points: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Analyze {
            form,
            common,
            json,
            evidence,
            log_input,
        } => {
            let config = ConfigSnapshot {
                max_depth: common.max_depth,
                ode_rtol: common.tol,
                ode_atol: common.tol * 1e-2,
                radius: common.radius,
                evidence,
            };
            let (report, status) = match (form, log_input) {
                (Some(src), None) => analyze_source(&src, &config).map_err(|e| e.to_string())?,
                (None, Some(path)) => analyze_log_input(&path, &config)?,
                (Some(_), Some(_)) => {
                    return Err("give either a form or --log-input, not both".into())
                }
                (None, None) => return Err("missing input: give a form or --log-input".into()),
            };
            let text = to_json(&report);
            match json {
                Some(path) => fs::write(&path, text.as_bytes())
                    .map_err(|e| format!("cannot write {}: {}", path.display(), e))?,
                None => println!("{}", text),
            }
            Ok(ExitCode::from(status.exit_code() as u8))
        }
        Command::Holonomy {
            k,
            mu,
            p,
            q,
            seed_re,
            seed_im,
            iters,
            common,
        } => {
            let mu = parse_scalar(&mu)?;
            let mut map = match (p, q) {
                (Some(p), Some(q)) => resonant_holonomy(p, q, k, mu).map_err(|e| e.to_string())?,
                (None, None) => saddle_node_strong_holonomy(k, mu).map_err(|e| e.to_string())?,
                _ => return Err("give both -p and -q for the resonant holonomy".into()),
            };
            if let Some(r) = common.radius {
                map.field.radius_of_validity = r;
            }
            map.tol.rtol = common.tol;
            map.tol.atol = common.tol * 1e-2;
            let seed = Complex64::new(seed_re, seed_im);
            let derivative = map.derivative_at_zero().map_err(|e| e.to_string())?;
            let orbit = orbit_classify(&map, seed, iters).map_err(|e| e.to_string())?;
            let summary = serde_json::json!({
                "schema_version": pfaff::report::SCHEMA_VERSION,
                "map": match (p, q) {
                    (Some(p), Some(q)) => format!("resonant holonomy (p={}, q={}, k={})", p, q, k),
                    _ => format!("saddle-node strong holonomy (k={})", k),
                },
                "radius_of_validity": map.field.radius_of_validity,
                "derivative_at_zero": { "re": derivative.re, "im": derivative.im },
                "orbit": {
                    "seed": { "re": seed.re, "im": seed.im },
                    "iterations": orbit.forward.len(),
                    "class": format!("{:?}", orbit.class),
                    "truncated": orbit.truncated,
                    "winding": orbit.diagnostics.winding,
                    "modulus_drift": orbit.diagnostics.modulus_drift,
                    "fatou_residual": orbit.diagnostics.fatou_residual,
                },
            });
            println!("{}", serde_json::to_string_pretty(&summary).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Command::Trace { kind } => {
            run_trace(kind)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { fixtures } => run_check(fixtures),
    }
}

fn parse_scalar(src: &str) -> Result<GaussianRational, String> {
    let p = parse_poly(src).map_err(|e| e.to_string())?;
    if !p.is_constant() {
        return Err(format!("expected a constant scalar, got '{}'", src));
    }
    Ok(p.constant_term()
        .cloned()
        .unwrap_or_else(GaussianRational::zero))
}

#[derive(serde::Deserialize)]
struct FactorEntry {
    factor: String,
    residue: String,
}

type FactorList = Vec<(pfaff::Poly2<GaussianRational>, GaussianRational)>;

fn read_factors(path: &PathBuf) -> Result<FactorList, String> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {}", path.display(), e))?;
    let entries: Vec<FactorEntry> =
        serde_json::from_str(&text).map_err(|e| format!("bad factors JSON: {}", e))?;
    entries
        .into_iter()
        .map(|e| {
            let f = parse_poly(&e.factor).map_err(|er| er.to_string())?;
            let r = parse_scalar(&e.residue)?;
            Ok((f, r))
        })
        .collect()
}

fn analyze_log_input(
    path: &PathBuf,
    config: &ConfigSnapshot,
) -> Result<(pfaff::report::AnalysisReport, AnalysisStatus), String> {
    let factors = read_factors(path)?;
    let tau = build_logarithmic(
        factors
            .iter()
            .map(|(f, r)| (f.clone(), Residue::Exact(r.clone())))
            .collect(),
    )
    .map_err(|e| e.to_string())?;
    let single = tau.to_single_fraction().map_err(|e| e.to_string())?;
    if !closedness_check(&single) {
        return Err("internal: logarithmic form failed the closedness check".into());
    }
    let eta = induced_holomorphic_form(&tau).map_err(|e| e.to_string())?;
    let magnitude = magnitude_first_integral(&tau).map_err(|e| e.to_string())?;
    let source = factors
        .iter()
        .map(|(f, r)| format!("({})*d({})/({})", r, f, f))
        .collect::<Vec<_>>()
        .join(" + ");
    let canonical = eta.to_string();
    let (mut report, status) =
        analyze_form(&eta, &source, &canonical, config).map_err(|e| e.to_string())?;
    report.input.kind = if magnitude.is_some() {
        "logarithmic with real residues".into()
    } else {
        "logarithmic".into()
    };
    Ok((report, status))
}

fn format_f64(x: f64) -> String {
    // 17 significant digits round-trip f64 exactly
    format!("{:.16e}", x)
}

fn run_trace(kind: TraceKind) -> Result<(), String> {
    match kind {
        TraceKind::HolonomyOrbit {
            k,
            mu,
            p,
            q,
            seed_re,
            seed_im,
            n,
            output,
        } => {
            let mu = parse_scalar(&mu)?;
            let map = match (p, q) {
                (Some(p), Some(q)) => resonant_holonomy(p, q, k, mu).map_err(|e| e.to_string())?,
                (None, None) => saddle_node_strong_holonomy(k, mu).map_err(|e| e.to_string())?,
                _ => return Err("give both -p and -q for the resonant holonomy".into()),
            };
            let seed = Complex64::new(seed_re, seed_im);
            let orbit = orbit_classify(&map, seed, n).map_err(|e| e.to_string())?;
            let mut csv = String::from("n,re,im,modulus\n");
            for (i, v) in orbit.forward.iter().enumerate() {
                csv.push_str(&format!(
                    "{},{},{},{}\n",
                    i + 1,
                    format_f64(v.re),
                    format_f64(v.im),
                    format_f64(v.norm())
                ));
            }
            fs::write(&output, csv.as_bytes())
                .map_err(|e| format!("cannot write {}: {}", output.display(), e))?;
            Ok(())
        }
        TraceKind::TransversalLeaf {
            alpha,
            seed_re,
            seed_im,
            arc,
            points,
            output,
        } => {
            let alpha = parse_scalar(&alpha)?;
            let tf = TransversalFoliation::linear_model(&alpha, SectionAxis::XSection);
            let seed = Complex64::new(seed_re, seed_im);
            let polyline = trace_leaf_polyline(&tf, seed, arc, points);
            let mut csv = String::from("s,re,im,modulus\n");
            for (s, v) in polyline {
                csv.push_str(&format!(
                    "{},{},{},{}\n",
                    format_f64(s),
                    format_f64(v.re),
                    format_f64(v.im),
                    format_f64(v.norm())
                ));
            }
            fs::write(&output, csv.as_bytes())
                .map_err(|e| format!("cannot write {}: {}", output.display(), e))?;
            Ok(())
        }
        TraceKind::CrossingScan {
            alpha,
            seed_radius,
            seeds,
            ray_angle,
            r_min,
            r_max,
            output,
        } => {
            let alpha = parse_scalar(&alpha)?;
            let tf = TransversalFoliation::linear_model(&alpha, SectionAxis::XSection);
            let mut csv = String::from("seed_re,seed_im,ray_angle,count\n");
            for j in 0..seeds {
                let angle = std::f64::consts::TAU * j as f64 / seeds.max(1) as f64;
                let seed = Complex64::from_polar(seed_radius, angle);
                let count =
                    pfaff::rolle::transversal_crossing_count(&tf, seed, ray_angle, r_min, r_max)
                        .map_err(|e| e.to_string())?;
                csv.push_str(&format!(
                    "{},{},{},{}\n",
                    format_f64(seed.re),
                    format_f64(seed.im),
                    format_f64(ray_angle),
                    count
                ));
            }
            fs::write(&output, csv.as_bytes())
                .map_err(|e| format!("cannot write {}: {}", output.display(), e))?;
            Ok(())
        }
        TraceKind::LevelSet {
            factors,
            c,
            t_min,
            t_max,
            points,
            output,
        } => {
            let factors = read_factors(&factors)?;
            if factors.len() != 2 {
                return Err("level-set tracing expects exactly the factors x and y".into());
            }
            let xvar: pfaff::Poly2<GaussianRational> = Poly::var(0, GaussianRational::one());
            let yvar: pfaff::Poly2<GaussianRational> = Poly::var(1, GaussianRational::one());
            let (mut l1, mut l2) = (None, None);
            for (f, r) in &factors {
                if *f == xvar {
                    l1 = Some(pfaff::scalar::rational_to_f64(&r.re));
                } else if *f == yvar {
                    l2 = Some(pfaff::scalar::rational_to_f64(&r.re));
                }
            }
            let (l1, l2) = match (l1, l2) {
                (Some(a), Some(b)) => (a, b),
                _ => {
                    return Err("level-set tracing expects the coordinate factors x and y".into())
                }
            };
            if l1.abs() < 1e-15 {
                return Err("the x-exponent must be nonzero".into());
            }
            // |x|^{l1}·|y|^{l2} = c along |y| = t: |x| = (c·t^{−l2})^{1/l1}
            let mut csv = String::from("t,abs_y,abs_x\n");
            for i in 0..points {
                let t = t_min + (t_max - t_min) * i as f64 / (points.max(2) - 1) as f64;
                let abs_x = (c * t.powf(-l2)).powf(1.0 / l1);
                csv.push_str(&format!(
                    "{},{},{}\n",
                    format_f64(t),
                    format_f64(t),
                    format_f64(abs_x)
                ));
            }
            fs::write(&output, csv.as_bytes())
                .map_err(|e| format!("cannot write {}: {}", output.display(), e))?;
            Ok(())
        }
    }
}

/// Trace the section leaf in both directions with fixed arc-length RK4 steps.
fn trace_leaf_polyline(
    tf: &TransversalFoliation,
    seed: Complex64,
    arc: f64,
    points: usize,
) -> Vec<(f64, Complex64)> {
    let half = points / 2;
    let step = arc / points.max(2) as f64;
    let trace = |dir: f64| -> Vec<(f64, Complex64)> {
        let mut v = seed;
        let mut s = 0.0;
        let mut acc = Vec::with_capacity(half);
        for _ in 0..half {
            let f = |z: Complex64| tf.leaf_velocity_at(z).map(|w| w * dir);
            let k1 = match f(v) {
                Some(k) => k,
                None => break,
            };
            let k2 = f(v + k1 * (step / 2.0)).unwrap_or(k1);
            let k3 = f(v + k2 * (step / 2.0)).unwrap_or(k2);
            let k4 = f(v + k3 * step).unwrap_or(k3);
            v += (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (step / 6.0);
            s += dir * step;
            acc.push((s, v));
        }
        acc
    };
    let mut out = Vec::with_capacity(points + 1);
    out.extend(trace(-1.0).into_iter().rev());
    out.push((0.0, seed));
    out.extend(trace(1.0));
    out
}

#[derive(serde::Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
enum Fixture {
    /// d(num/den) = 0 must hold exactly iff expect.
    Closedness {
        numerator: String,
        denominator: String,
        expect: bool,
    },
    /// Both integrability 4-forms vanish iff expect_flat.
    Levi { omega: String, expect_flat: bool },
    /// Two expressions parse to exactly the same form.
    Identity { lhs: String, rhs: String },
    /// Chart-1 pullback of the saddle-node normal form equals u·η_k after
    /// stripping the content u.
    BlowupSaddleNode { k: u32, mu: String },
    /// d(d(poly)) = 0.
    DSquared { poly: String },
}

fn builtin_fixtures() -> &'static str {
    r#"[
  {"kind": "closedness", "numerator": "x*(1+(1/2)*y)*dy - y^2*dx", "denominator": "x*y^2", "expect": true},
  {"kind": "closedness", "numerator": "y*(1+(-1/2)*x*y^2)*dx + 2*x*(1+(1/2)*x*y^2)*dy", "denominator": "x*y*x*y^2", "expect": true},
  {"kind": "closedness", "numerator": "y*dx", "denominator": "x", "expect": false},
  {"kind": "levi", "omega": "conj(x)*y*conj(y)*dx + x*y*conj(y)*d(conj(x)) - (1/2)*x*conj(x)*conj(y)*dy - (1/2)*x*conj(x)*y*d(conj(y))", "expect_flat": true},
  {"kind": "levi", "omega": "conj(x)*dx + x*d(conj(x)) + conj(y)*dy + y*d(conj(y))", "expect_flat": false},
  {"kind": "identity", "lhs": "x*dy - y*dx + x*dy", "rhs": "2*x*dy - y*dx"},
  {"kind": "blowup-saddle-node", "k": 1, "mu": "1/2"},
  {"kind": "blowup-saddle-node", "k": 2, "mu": "i"},
  {"kind": "blowup-saddle-node", "k": 3, "mu": "0"},
  {"kind": "d-squared", "poly": "x^2*y + (1/3)*x*y^2"}
]"#
}

fn run_check(fixtures: Option<PathBuf>) -> Result<ExitCode, String> {
    let text = match &fixtures {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {}", path.display(), e))?,
        None => builtin_fixtures().to_string(),
    };
    let entries: Vec<Fixture> =
        serde_json::from_str(&text).map_err(|e| format!("bad fixture JSON: {}", e))?;
    let mut failures = 0usize;
    for (i, fixture) in entries.iter().enumerate() {
        let (name, ok) = run_fixture(fixture)?;
        let status = if ok { "pass" } else { "FAIL" };
        if !ok {
            failures += 1;
        }
        println!("[{}] {:<64} {}", i + 1, name, status);
    }
    println!("{} fixtures, {} failed", entries.len(), failures);
    if failures == 0 {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn run_fixture(fixture: &Fixture) -> Result<(String, bool), String> {
    match fixture {
        Fixture::Closedness {
            numerator,
            denominator,
            expect,
        } => {
            let num = match parse_oneform(numerator).map_err(|e| e.to_string())? {
                ParsedForm::Holo(h) => h,
                ParsedForm::Real(_) => {
                    return Err("closedness fixtures expect holomorphic numerators".into())
                }
            };
            let den = parse_poly(denominator).map_err(|e| e.to_string())?;
            let tau = pfaff::forms::MeroOneForm::holo(num, den).map_err(|e| e.to_string())?;
            let closed = closedness_check(&tau);
            Ok((
                format!("closedness of ({})/({})", numerator, denominator),
                closed == *expect,
            ))
        }
        Fixture::Levi { omega, expect_flat } => {
            let form = parse_oneform(omega).map_err(|e| e.to_string())?;
            let omega_real: RealPForm = form.to_real();
            let (a, b) = levi_integrability_check(&omega_real).map_err(|e| e.to_string())?;
            let flat = a.is_zero() && b.is_zero();
            Ok((
                format!("Levi integrability of {}", omega),
                flat == *expect_flat,
            ))
        }
        Fixture::Identity { lhs, rhs } => {
            let l = parse_oneform(lhs).map_err(|e| e.to_string())?;
            let r = parse_oneform(rhs).map_err(|e| e.to_string())?;
            Ok((
                format!("identity {} == {}", lhs, rhs),
                l.to_real() == r.to_real(),
            ))
        }
        Fixture::BlowupSaddleNode { k, mu } => {
            let mu = parse_scalar(mu)?;
            let x: pfaff::Poly2<GaussianRational> = Poly::var(0, GaussianRational::one());
            let y: pfaff::Poly2<GaussianRational> = Poly::var(1, GaussianRational::one());
            let one = pfaff::Poly2::constant(GaussianRational::one());
            let b = x.mul(&one.add(&y.pow(*k).mul_scalar(&mu)));
            let a = y.pow(*k + 1).neg();
            let eta = HoloOneForm::new(a, b).map_err(|e| e.to_string())?;
            let (c1, _) = blowup_at_origin(&eta).map_err(|e| e.to_string())?;
            // expected strict transform: v(1+(μ−1)wᵏ)du + u(1+μwᵏ)dv, w = uv
            let w = x.mul(&y);
            let mu_m1 = mu.sub_ref(&GaussianRational::one());
            let ea = y.mul(&one.add(&w.pow(*k).mul_scalar(&mu_m1)));
            let eb = x.mul(&one.add(&w.pow(*k).mul_scalar(&mu)));
            let ok = c1.chart == Chart::XT
                && c1.content_removed == x
                && c1.form.a == ea
                && c1.form.b == eb;
            Ok((
                format!("saddle-node blow-up identity (k={}, mu={})", k, mu),
                ok,
            ))
        }
        Fixture::DSquared { poly } => {
            let p = parse_poly(poly).map_err(|e| e.to_string())?;
            let f = RealPForm::function(pfaff::poly::embed_poly2(&p));
            let dd = f
                .exterior_derivative()
                .and_then(|d| d.exterior_derivative())
                .map_err(|e| e.to_string())?;
            Ok((format!("d(d({})) = 0", poly), dd.is_zero()))
        }
    }
}

//! Command-line front end: reads an ideal file, runs one pipeline command,
//! prints a text report and optionally writes a JSON report.

pub mod report;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use infcone::cone::{closure_vars, cone_at_infinity, part_at_infinity, projective_closure, CoordinateSplit};
use infcone::ideal::Ideal;
use infcone::ideal_file::IdealFile;
use infcone::invariants::{dim_degree, reduced_degree, verify_theorem, TheoremReport, VerifyOptions};
use infcone::poly::{MonomialOrder, Polynomial};
use infcone::probe::{
    lne_profile, region_fit, sample_hypersurface, tangent_directions, Hypersurface, LneOptions, LneProfile,
    PointCloud,
};
use infcone::Error;

use report::{
    Checks, ClosureStage, ConeStage, Failure, InvariantStage, LneStage, RegionStage, Report, TangentStage,
};

#[derive(Debug, Parser)]
#[command(name = "infcone", version, about = "Tangent cones at infinity, dimensions and degrees of affine varieties")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Ideal file (`vars:` line, then one `p:` line per generator).
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,

    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Monomial order for printed bases (grevlex, grlex, lex).
    #[arg(long, global = true, default_value_t = MonomialOrder::GrevLex)]
    pub order: MonomialOrder,

    /// Also write a JSON report here.
    #[arg(long, global = true)]
    pub json: Option<PathBuf>,

    /// Pair-reduction budget for each Gröbner basis computation.
    #[arg(long, global = true)]
    pub budget: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generators of the tangent cone at infinity.
    Cone,
    /// Projective closure and its part at infinity.
    Closure,
    /// Dimension and degree.
    Invariants,
    /// Compare dimension and degree with those of the cone at infinity.
    Verify {
        /// Skip the distance probe.
        #[arg(long)]
        no_lne: bool,
    },
    /// Inner versus Euclidean distance ratios at growing radii (hypersurfaces).
    LneProbe {
        #[arg(long, value_delimiter = ',', default_values_t = [10.0, 20.0, 40.0, 80.0])]
        radii: Vec<f64>,
        /// Points per band.
        #[arg(long, default_value_t = 400)]
        count: usize,
        /// Starting neighbor count.
        #[arg(long, default_value_t = 8)]
        k: usize,
    },
    /// Fit `|z''| <= A (1 + |z'|)^B` to samples (hypersurfaces).
    RegionFit {
        /// Variables spanning the first block; defaults to all but the last.
        #[arg(long, value_delimiter = ',')]
        first: Vec<String>,
        #[arg(long, value_delimiter = ',', default_values_t = [10.0, 1000.0])]
        band: Vec<f64>,
        #[arg(long, default_value_t = 400)]
        count: usize,
        /// Export the sampled cloud as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Limit directions at infinity against the cone (hypersurfaces).
    TangentDirs {
        #[arg(long, value_delimiter = ',', default_values_t = [10.0, 100.0, 1000.0, 10000.0])]
        scales: Vec<f64>,
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
}

/// A failure tagged with the stage it happened in.
#[derive(Debug)]
pub struct Failed {
    pub stage: String,
    pub message: String,
}

impl Failed {
    fn at(stage: &str) -> impl FnOnce(Error) -> Failed + '_ {
        move |e| Failed { stage: stage.to_string(), message: e.to_string() }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code: 0 on success, 1 on input or pipeline
/// errors, 2 on usage errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli) {
        Ok((text, report)) => {
            if let Some(path) = &cli.json {
                if let Err(e) = fs::write(path, report.render()) {
                    let _ = writeln!(err, "error: writing {}: {e}", path.display());
                    return 1;
                }
            }
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}: {}", f.stage, f.message);
            1
        }
    }
}

fn read_input(path: Option<&Path>) -> Result<IdealFile, Failed> {
    let path = path.ok_or(Failed { stage: "input".into(), message: "no --input file given".into() })?;
    let text = fs::read_to_string(path).map_err(|e| Failed {
        stage: "input".into(),
        message: match e.kind() {
            io::ErrorKind::NotFound => format!("{}: file not found", path.display()),
            _ => format!("{}: {e}", path.display()),
        },
    })?;
    IdealFile::parse(&text).map_err(|e| Failed { stage: "parse".into(), message: format!("{}: {e}", path.display()) })
}

fn execute(cli: &Cli) -> Result<(String, Report), Failed> {
    let file = read_input(cli.input.as_deref())?;
    let mut ideal = file.ideal().map_err(Failed::at("parse"))?;
    if let Some(b) = cli.budget {
        ideal = ideal.with_budget(b);
    }
    let input = cli.input.as_deref().map(|p| p.display().to_string()).unwrap_or_default();
    let mut report = Report::new(&input, cli.seed);
    let mut text = String::new();
    let order = cli.order;
    match &cli.command {
        Command::Cone => {
            let cone = cone_at_infinity(&ideal).map_err(Failed::at("cone"))?;
            let gens = render_all(cone.generators(), order);
            for g in &gens {
                writeln!(text, "{g}").unwrap();
            }
            report.stages.cone = Some(ConeStage { generators: gens });
        }
        Command::Closure => {
            let closure = projective_closure(&ideal).map_err(Failed::at("closure"))?;
            let basis = closure.groebner_basis(order).map_err(Failed::at("closure"))?;
            let part = part_at_infinity(&ideal).map_err(Failed::at("part at infinity"))?;
            let vars: Vec<String> = closure_vars(ideal.vars()).iter().cloned().collect();
            let generators = render_all(&basis, order);
            let part_gens = render_all(part.generators(), order);
            writeln!(text, "closure in variables {}:", vars.join(" ")).unwrap();
            for g in &generators {
                writeln!(text, "  {g}").unwrap();
            }
            writeln!(text, "part at infinity:").unwrap();
            for g in &part_gens {
                writeln!(text, "  {g}").unwrap();
            }
            report.stages.closure = Some(ClosureStage { vars, generators, part_at_infinity: part_gens });
        }
        Command::Invariants => {
            let h = dim_degree(&ideal).map_err(Failed::at("invariants"))?;
            writeln!(text, "dimension: {}", h.dim).unwrap();
            writeln!(text, "degree (with multiplicity): {}", h.degree).unwrap();
            writeln!(text, "hilbert numerator: {}", h.numerator).unwrap();
            let reduced = if h.is_empty() {
                Some(0)
            } else {
                match reduced_degree(&ideal, cli.seed) {
                    Ok(d) => Some(d as u64),
                    Err(e) => {
                        report.stages.failures.push(Failure { stage: "reduced degree".into(), message: e.to_string() });
                        None
                    }
                }
            };
            writeln!(text, "degree (reduced): {}", opt(&reduced)).unwrap();
            report.stages.invariants = Some(InvariantStage {
                dim: h.dim,
                degree_scheme: h.degree,
                hilbert_numerator: Some(h.numerator.to_string()),
            });
            report.stages.reduced_degree = Some(reduced);
        }
        Command::Verify { no_lne } => {
            let lne = (!no_lne && probe_applies(&ideal)).then(LneOptions::default);
            let options = VerifyOptions { lne, ..Default::default() };
            let r = verify_theorem(&ideal, cli.seed, &options).map_err(Failed::at("verify"))?;
            text = verify_text(&r, order);
            fill_verify(&mut report, &r, order);
        }
        Command::LneProbe { radii, count, k } => {
            let f = hypersurface(&ideal, "lne probe")?;
            let options = LneOptions { radii: radii.clone(), count: *count, k: *k, ..Default::default() };
            let p = lne_profile(f, &options, cli.seed).map_err(Failed::at("lne probe"))?;
            writeln!(text, "radius   max inner/euclidean ratio").unwrap();
            for (r, q) in p.radii.iter().zip(&p.ratios) {
                writeln!(text, "{r:>8} {q:.4}").unwrap();
            }
            writeln!(text, "verdict: {} (C estimate {:.4})", p.verdict, p.c_estimate).unwrap();
            report.stages.lne = Some(Some(lne_stage(&p)));
        }
        Command::RegionFit { first, band, count, csv } => {
            let f = hypersurface(&ideal, "region fit")?;
            let [lo, hi] = band[..] else {
                return Err(Failed { stage: "region fit".into(), message: "--band takes two values".into() });
            };
            let names: Vec<String> = if first.is_empty() {
                ideal.vars()[..ideal.nvars() - 1].to_vec()
            } else {
                first.clone()
            };
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            let split = CoordinateSplit::with_first(ideal.vars(), &refs).map_err(Failed::at("region fit"))?;
            let cloud = sample_hypersurface(f, (lo, hi), *count, cli.seed).map_err(Failed::at("sampling"))?;
            let region = region_fit(&cloud, &split).map_err(Failed::at("region fit"))?;
            let coverage = region.coverage(&cloud);
            writeln!(text, "split: first block {}", names.join(" ")).unwrap();
            writeln!(text, "A = {:.6}, B = {:.6}", region.a, region.b).unwrap();
            writeln!(text, "{} points in band ({lo}, {hi}), coverage {:.1}%", cloud.len(), 100.0 * coverage).unwrap();
            if let Some(path) = csv {
                write_cloud_csv(path, &cloud, ideal.vars()).map_err(|message| Failed { stage: "csv export".into(), message })?;
                writeln!(text, "cloud written to {}", path.display()).unwrap();
            }
            report.stages.region = Some(RegionStage { first: names, a: region.a, b: region.b, band: [lo, hi], points: cloud.len(), coverage });
        }
        Command::TangentDirs { scales, count } => {
            let f = hypersurface(&ideal, "tangent directions")?;
            let cone = cone_at_infinity(&ideal).map_err(Failed::at("cone"))?;
            let res = tangent_directions(f, scales, *count, cli.seed, &cone).map_err(Failed::at("tangent directions"))?;
            let residuals = res.residuals();
            writeln!(text, "scale      max cone residual").unwrap();
            for (s, r) in scales.iter().zip(&residuals) {
                writeln!(text, "{s:>10} {r:.3e}").unwrap();
            }
            writeln!(text, "direction clusters at the largest scale:").unwrap();
            for c in &res.clusters {
                let coords: Vec<String> = c.vector.iter().map(|z| format!("{:.4}{:+.4}i", z.re, z.im)).collect();
                writeln!(text, "  ({})  residual {:.3e}", coords.join(", "), c.residual).unwrap();
            }
            report.stages.cone = Some(ConeStage { generators: render_all(cone.generators(), order) });
            report.stages.tangent = Some(TangentStage {
                scales: scales.clone(),
                residuals,
                clusters: res.clusters.iter().map(|c| c.vector.iter().map(|z| [z.re, z.im]).collect()).collect(),
                cluster_residuals: res.clusters.iter().map(|c| c.residual).collect(),
            });
        }
    }
    Ok((text, report))
}

fn render_all(polys: &[Polynomial], order: MonomialOrder) -> Vec<String> {
    polys.iter().map(|p| p.with_order(order).to_string()).collect()
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "unavailable".into(), ToString::to_string)
}

/// The probe samples hypersurfaces solved for their last variable.
fn probe_applies(ideal: &Ideal) -> bool {
    matches!(ideal.generators(), [f] if Hypersurface::new(f).is_ok())
}

fn hypersurface<'a>(ideal: &'a Ideal, stage: &str) -> Result<&'a Polynomial, Failed> {
    match ideal.generators() {
        [f] => {
            Hypersurface::new(f).map_err(Failed::at(stage))?;
            Ok(f)
        }
        _ => Err(Failed { stage: stage.into(), message: "needs a single defining polynomial".into() }),
    }
}

fn lne_stage(p: &LneProfile) -> LneStage {
    LneStage { radii: p.radii.clone(), ratios: p.ratios.clone(), verdict: p.verdict.to_string(), c_estimate: p.c_estimate }
}

fn verify_text(r: &TheoremReport, order: MonomialOrder) -> String {
    let mut text = String::new();
    writeln!(text, "cone at infinity: ({})", render_all(&r.cone, order).join(", ")).unwrap();
    let eq = if r.dims_equal { "equal" } else { "DIFFERENT" };
    writeln!(text, "dimension: X {}, cone {} ({eq})", r.dim_x, r.dim_cone).unwrap();
    writeln!(text, "degree with multiplicity: X {}, cone {}", r.deg_scheme_x, r.deg_scheme_cone).unwrap();
    writeln!(text, "reduced degree: X {}, cone {}", opt(&r.deg_reduced_x), opt(&r.deg_reduced_cone)).unwrap();
    writeln!(text, "deg X >= deg cone: {}", opt(&r.inequality_holds)).unwrap();
    writeln!(text, "equality: {}", opt(&r.equality_holds)).unwrap();
    match &r.lne {
        Some(p) => {
            let ratios: Vec<String> = p.ratios.iter().map(|q| format!("{q:.3}")).collect();
            writeln!(text, "distance ratios at radii {:?}: [{}], verdict {}", p.radii, ratios.join(", "), p.verdict).unwrap();
        }
        None => writeln!(text, "distance probe: not run").unwrap(),
    }
    for f in &r.failures {
        writeln!(text, "{} unavailable: {}", f.stage, f.message).unwrap();
    }
    text
}

fn fill_verify(report: &mut Report, r: &TheoremReport, order: MonomialOrder) {
    let s = &mut report.stages;
    s.cone = Some(ConeStage { generators: render_all(&r.cone, order) });
    s.invariants = Some(InvariantStage { dim: r.dim_x, degree_scheme: r.deg_scheme_x, hilbert_numerator: None });
    s.cone_invariants = Some(InvariantStage { dim: r.dim_cone, degree_scheme: r.deg_scheme_cone, hilbert_numerator: None });
    s.reduced_degree = Some(r.deg_reduced_x);
    s.reduced_cone_degree = Some(r.deg_reduced_cone);
    s.checks = Some(Checks { dims_equal: r.dims_equal, inequality_holds: r.inequality_holds, equality_holds: r.equality_holds });
    s.lne = Some(r.lne.as_ref().map(lne_stage));
    s.failures = r.failures.iter().map(|f| Failure { stage: f.stage.to_string(), message: f.message.clone() }).collect();
}

/// CSV with columns `re_<v>, im_<v>` per variable and the point's norm.
pub fn write_cloud_csv(path: &Path, cloud: &PointCloud, names: &[String]) -> Result<(), String> {
    let mut w = csv::Writer::from_path(path).map_err(|e| e.to_string())?;
    let mut header: Vec<String> = names.iter().flat_map(|v| [format!("re_{v}"), format!("im_{v}")]).collect();
    header.push("radius".into());
    w.write_record(&header).map_err(|e| e.to_string())?;
    for i in 0..cloud.len() {
        let mut row: Vec<String> = cloud.real(i).iter().map(|x| x.to_string()).collect();
        row.push(cloud.norm(i).to_string());
        w.write_record(&row).map_err(|e| e.to_string())?;
    }
    w.flush().map_err(|e| e.to_string())
}

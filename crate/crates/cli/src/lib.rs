//! The `lencat` command line. Exit codes: 0 success, 1 semantic failure
//! (violated criterion, deviation, failed check), 2 input error.

pub mod report;

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lencat::abcat::{are_isomorphic, composition_series, is_indecomposable, SimpleFamily};
use lencat::gradedrep::{GradedRep, TwistedSimple, WeylLabel, DEFAULT_MARGIN, GRADED_REP_TAG};
use lencat::itext::{extension_type, from_deformation, to_deformation, IteratedExtension};
use lencat::quiverrep::{QuiverPresentation, QuiverRep, QUIVER_REP_TAG};
use lencat::species::{admissible_paths, classify, species_of, uc_check, Species};
use lencat::weylcat::{catalog_module, ext_table, verify_theorem, weyl_family, CatalogKey, CatalogKind};
use lencat::Scalar;

use report::{
    Body, ClassifiedObject, ClassifyReport, Conventions, DeformReport, ExtTableReport, ModuleReport, Report, UcReport,
};

#[derive(Parser, Debug)]
#[command(name = "lencat", version, about = "Exact computations in length categories")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide the uniseriality criterion for a species file.
    CheckUc { species: PathBuf },
    /// Enumerate and certify the indecomposables of length n.
    Classify(ClassifyArgs),
    /// Graded Ext^1 between simple D-modules, compared with the prediction.
    ExtTable(ExtTableArgs),
    /// Print a catalog module as a graded representation.
    WeylModule(WeylModuleArgs),
    /// Check the classification of graded D-modules against the catalog.
    VerifyWeyl(VerifyArgs),
    /// Deformation data of an object and the round-trip verdict.
    Deform(DeformArgs),
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false, id = "backend")]
pub struct BackendArgs {
    /// Quiver presentation file; the simples are the vertex simples.
    #[arg(long)]
    pub quiver: Option<PathBuf>,
    /// Comma separated Weyl labels (`1/2`, `1/3+1/2*i`, `0`, `inf`), twists -1, 0, 1.
    #[arg(long, value_delimiter = ',')]
    pub weyl: Option<Vec<String>>,
    /// Species file; only the admissible vectors are listed.
    #[arg(long)]
    pub species: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub backend: BackendArgs,
    #[arg(short, long)]
    pub n: usize,
    /// Start label: a species label, a node name or a Weyl label (twist 0).
    #[arg(long, allow_hyphen_values = true)]
    pub start: Option<String>,
    /// Weight window `LO:HI`; defaults to `[-(n+4), n+4]`.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_window)]
    pub window: Option<(i64, i64)>,
}

#[derive(Args, Debug)]
pub struct ExtTableArgs {
    #[arg(long, allow_hyphen_values = true, value_parser = parse_window, default_value = "-8:8")]
    pub window: (i64, i64),
    #[arg(long, default_value_t = DEFAULT_MARGIN)]
    pub margin: i64,
    #[arg(long, value_delimiter = ',', default_value = "1/2,1/3+1/2*i,0,inf")]
    pub labels: Vec<String>,
    #[arg(long, default_value_t = 2)]
    pub max_offset: i64,
}

#[derive(Args, Debug)]
pub struct WeylModuleArgs {
    /// `M(label,n)[twist]`, e.g. `M(1/2,3)` or `M(inf,2)[-1]`.
    pub key: String,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_window)]
    pub window: Option<(i64, i64)>,
    #[arg(long, default_value_t = DEFAULT_MARGIN)]
    pub margin: i64,
    /// Accept `alpha` outside J* by shifting it by an integer and moving
    /// the shift into the twist.
    #[arg(long)]
    pub normalize: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub n_max: u32,
    /// Fixed window for every length; defaults to `[-(n+4), n+4]` per length.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_window)]
    pub window: Option<(i64, i64)>,
    #[arg(long, default_value_t = DEFAULT_MARGIN)]
    pub margin: i64,
    #[arg(long, value_delimiter = ',', default_value = "1/2,1/3+1/2*i")]
    pub alphas: Vec<String>,
    /// Grow the default windows by this many weights on each side.
    #[arg(long, default_value_t = 0)]
    pub enlarge: i64,
}

#[derive(Args, Debug)]
pub struct DeformArgs {
    /// Catalog key `M(label,n)[twist]`.
    #[arg(long, required_unless_present = "object")]
    pub key: Option<String>,
    /// A quiver-rep or graded-rep file (leading `#` lines are skipped).
    #[arg(long, conflicts_with = "key")]
    pub object: Option<PathBuf>,
    /// Weyl labels of the simples, required for a graded-rep object.
    #[arg(long, value_delimiter = ',')]
    pub labels: Option<Vec<String>>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_window)]
    pub window: Option<(i64, i64)>,
    #[arg(long, default_value_t = DEFAULT_MARGIN)]
    pub margin: i64,
}

fn parse_window(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once(':').ok_or_else(|| format!("expected LO:HI, got `{}`", s))?;
    let lo: i64 = a.trim().parse().map_err(|_| format!("bad window bound `{}`", a))?;
    let hi: i64 = b.trim().parse().map_err(|_| format!("bad window bound `{}`", b))?;
    if lo >= hi {
        return Err(format!("empty window {}:{}", lo, hi));
    }
    Ok((lo, hi))
}

#[derive(Debug)]
pub enum CliError {
    /// Unreadable or malformed input, bad flags, a window that is too small.
    Input(String),
    /// A well-formed request the mathematics refuses.
    Semantic(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Semantic(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Semantic(m) => f.write_str(m),
        }
    }
}

impl From<lencat::Error> for CliError {
    fn from(e: lencat::Error) -> Self {
        use lencat::Error as E;
        match e {
            E::Parse(_)
            | E::UnknownNode(_)
            | E::UnknownArrow(_)
            | E::MalformedPath(_)
            | E::WindowTooSmall { .. }
            | E::DegenerateWindow { .. }
            | E::NotInJStar(_)
            | E::ZeroLength
            | E::DimensionMismatch(_)
            | E::RelationViolated(_) => CliError::Input(e.to_string()),
            _ => CliError::Semantic(e.to_string()),
        }
    }
}

pub struct Outcome {
    pub report: Report,
    pub code: u8,
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::CheckUc { species } => check_uc(species),
        Command::Classify(a) => run_classify(a),
        Command::ExtTable(a) => run_ext_table(a),
        Command::WeylModule(a) => weyl_module(a),
        Command::VerifyWeyl(a) => verify_weyl(a),
        Command::Deform(a) => deform(a),
    }
}

pub fn render(format: Format, report: &Report) -> String {
    match format {
        Format::Human => report::render_human(report),
        Format::Json => serde_json::to_string_pretty(report).expect("reports serialize") + "\n",
    }
}

pub fn emit(cli: &Cli, report: &Report) -> Result<(), CliError> {
    let text = render(cli.format, report);
    match &cli.output {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Input(format!("{}: {}", path.display(), e))),
        None => {
            print!("{}", text);
            Ok(())
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {}", path.display(), e)))
}

fn labels(raw: &[String]) -> Result<Vec<WeylLabel>, CliError> {
    let mut out: Vec<WeylLabel> = Vec::new();
    for r in raw {
        let l: WeylLabel = r.parse()?;
        if out.contains(&l) {
            return Err(CliError::Input(format!("label `{}` given twice", r)));
        }
        out.push(l);
    }
    Ok(out)
}

fn check_uc(path: &Path) -> Result<Outcome, CliError> {
    let species: Species = read(path)?.parse()?;
    let violation = uc_check(&species);
    let code = u8::from(violation.is_some());
    let body = Body::CheckUc(UcReport {
        labels: species.labels().to_vec(),
        uniserial: violation.is_none(),
        violation,
    });
    Ok(Outcome {
        report: Report::new(Conventions::new(None, None), body),
        code,
    })
}

fn refuse_uc(species: &Species) -> Result<(), CliError> {
    match uc_check(species) {
        None => Ok(()),
        Some(v) => Err(CliError::Semantic(format!(
            "the species violates the uniseriality criterion ({}); run `lencat check-uc` for details",
            v
        ))),
    }
}

fn resolve_start(species: &Species, start: &str, weyl: bool) -> Result<usize, CliError> {
    if let Some(i) = species.index(start) {
        return Ok(i);
    }
    let alias = if weyl {
        start
            .parse::<WeylLabel>()
            .ok()
            .map(|l| TwistedSimple::new(l, 0).to_string())
    } else {
        Some(format!("S_{}", start))
    };
    alias
        .and_then(|a| species.index(&a))
        .ok_or_else(|| CliError::Input(format!("unknown start label `{}`", start)))
}

fn run_classify(a: &ClassifyArgs) -> Result<Outcome, CliError> {
    if a.n == 0 {
        return Err(CliError::Input("n must be at least 1".into()));
    }
    let named = |s: &Species, v: &[usize]| -> Vec<String> { v.iter().map(|&i| s.labels()[i].clone()).collect() };
    let (backend, family, window) = if let Some(path) = &a.backend.species {
        let species: Species = read(path)?.parse()?;
        refuse_uc(&species)?;
        let start = a.start.as_deref().map(|s| resolve_start(&species, s, false)).transpose()?;
        let admissible = admissible_paths(&species, a.n)?
            .into_iter()
            .filter(|p| start.is_none_or(|s| p[0] == s))
            .map(|p| named(&species, &p))
            .collect();
        let body = Body::Classify(ClassifyReport {
            backend: format!("species {}", path.display()),
            n: a.n,
            start: a.start.clone(),
            admissible,
            objects: Vec::new(),
        });
        return Ok(Outcome {
            report: Report::new(Conventions::new(None, None), body),
            code: 0,
        });
    } else if let Some(path) = &a.backend.quiver {
        let pres: QuiverPresentation = read(path)?.parse()?;
        let family = SimpleFamily::nodes(&Arc::new(pres));
        (format!("quiver {}", path.display()), family, None)
    } else {
        let raw = a.backend.weyl.as_deref().unwrap_or_default();
        let ls = labels(raw)?;
        let reach = a.n as i64 + 4;
        let (lo, hi) = a.window.unwrap_or((-reach, reach));
        (format!("weyl {}", raw.join(",")), weyl_family(&ls, lo, hi)?, Some((lo, hi)))
    };
    let species = species_of(&family)?;
    refuse_uc(&species)?;
    let start = a
        .start
        .as_deref()
        .map(|s| resolve_start(&species, s, window.is_some()))
        .transpose()?;
    let admissible = admissible_paths(&species, a.n)?
        .into_iter()
        .filter(|p| start.is_none_or(|s| p[0] == s))
        .map(|p| named(&species, &p))
        .collect();
    let mut objects = Vec::new();
    let mut code = 0;
    for c in classify(&species, &family, a.n, start)? {
        let certified = c.certified();
        if !certified {
            code = 1;
        }
        let object = match window {
            Some(_) => GradedRep::from_quiver_rep(c.object())?.to_text(),
            None => c.object().to_text(),
        };
        objects.push(ClassifiedObject {
            vector: named(&species, c.vector()),
            realizability: format!("{:?}", c.realization.realizability).to_lowercase(),
            restriction_ranks: c.realization.restriction_ranks.clone(),
            end_dim: c.end.end_dim,
            end_radical_dim: c.end.radical_dim,
            indecomposable: c.indecomposable,
            uniserial_factors: c.uniserial_factors.as_ref().map(|f| named(&species, f)),
            certified,
            object,
        });
    }
    let body = Body::Classify(ClassifyReport {
        backend,
        n: a.n,
        start: a.start.clone(),
        admissible,
        objects,
    });
    let margin = window.map(|_| DEFAULT_MARGIN);
    Ok(Outcome {
        report: Report::new(Conventions::new(window, margin), body),
        code,
    })
}

fn run_ext_table(a: &ExtTableArgs) -> Result<Outcome, CliError> {
    let ls = labels(&a.labels)?;
    let (lo, hi) = a.window;
    let entries = ext_table(&ls, a.max_offset, lo, hi, a.margin)?;
    let deviations = entries.iter().filter(|e| e.deviates()).count();
    let body = Body::ExtTable(ExtTableReport {
        max_offset: a.max_offset.abs(),
        entries,
        deviations,
    });
    Ok(Outcome {
        report: Report::new(Conventions::new(Some(a.window), Some(a.margin)), body),
        code: u8::from(deviations > 0),
    })
}

fn parse_key(s: &str, normalize: bool) -> Result<(CatalogKey, i64), CliError> {
    if normalize {
        Ok(CatalogKey::parse_normalized(s)?)
    } else {
        Ok((s.parse()?, 0))
    }
}

fn weyl_module(a: &WeylModuleArgs) -> Result<Outcome, CliError> {
    let (key, shift) = parse_key(&a.key, a.normalize)?;
    let (lo, hi) = a.window.unwrap_or_else(|| key.default_window());
    let m = catalog_module(&key, lo, hi, a.margin)?;
    let body = Body::WeylModule(ModuleReport {
        key,
        normalized_shift: shift,
        dims: m.dims().to_vec(),
        module: m.to_text(),
    });
    Ok(Outcome {
        report: Report::new(Conventions::new(Some((lo, hi)), Some(a.margin)), body),
        code: 0,
    })
}

fn verify_weyl(a: &VerifyArgs) -> Result<Outcome, CliError> {
    let alphas: Vec<Scalar> = a.alphas.iter().map(|s| s.parse()).collect::<Result<_, _>>()?;
    if a.n_max == 0 {
        return Err(CliError::Input("n-max must be at least 1".into()));
    }
    let report = verify_theorem(a.n_max, &alphas, a.window, a.margin, a.enlarge)?;
    let code = u8::from(!report.passed());
    Ok(Outcome {
        report: Report::new(Conventions::new(a.window, Some(a.margin)), Body::VerifyWeyl(report)),
        code,
    })
}

/// Starts parsing at the format tag line so that reports with leading
/// comments can be fed back in.
fn load_object(text: &str) -> Result<(QuiverRep, bool), CliError> {
    let from = |tag: &str| text.find(tag).map(|i| &text[i..]);
    if let Some(t) = from(GRADED_REP_TAG) {
        let g = GradedRep::from_text(t)?;
        if !g.validate().is_valid() {
            return Err(CliError::Input("graded representation violates the Weyl relation".into()));
        }
        Ok((g.to_quiver_rep()?, true))
    } else if let Some(t) = from(QUIVER_REP_TAG) {
        Ok((QuiverRep::from_text(t)?, false))
    } else {
        Err(CliError::Input(format!(
            "expected a `{}` or `{}` file",
            GRADED_REP_TAG, QUIVER_REP_TAG
        )))
    }
}

fn deform(a: &DeformArgs) -> Result<Outcome, CliError> {
    let (input, x, family, window) = match (&a.key, &a.object) {
        (Some(k), _) => {
            let key: CatalogKey = k.parse()?;
            let (lo, hi) = a.window.unwrap_or_else(|| key.default_window());
            let x = catalog_module(&key, lo, hi, a.margin)?.to_quiver_rep()?;
            let ls = match key.kind {
                CatalogKind::Euler(_) => vec![key.label()],
                CatalogKind::Word(_) => vec![WeylLabel::Zero, WeylLabel::Infinity],
            };
            let s = key.twist;
            let family = SimpleFamily::weyl_twists(&ls, &[s - 1, s, s + 1], lo, hi)?;
            (key.to_string(), x, family, Some((lo, hi)))
        }
        (None, Some(path)) => {
            let (x, graded) = load_object(&read(path)?)?;
            if graded {
                let raw = a
                    .labels
                    .as_deref()
                    .ok_or_else(|| CliError::Input("a graded object needs --labels".into()))?;
                let g = GradedRep::from_quiver_rep(&x)?;
                let (lo, hi) = g.window();
                let family = SimpleFamily::weyl(&labels(raw)?, lo, hi, a.margin)?;
                (path.display().to_string(), x, family, Some((lo, hi)))
            } else {
                let family = SimpleFamily::nodes(x.presentation());
                (path.display().to_string(), x, family, None)
            }
        }
        (None, None) => return Err(CliError::Input("give --key or --object".into())),
    };
    if x.is_zero() {
        return Err(CliError::Input("the object is zero".into()));
    }
    let series = composition_series(&x, &family)?;
    let e = IteratedExtension::from_series(&series, &family)?;
    let d = to_deformation(&e, &family)?;
    let data = d.data();
    let back = from_deformation(&d, &family)?;
    let order_preserved = back.order() == e.order() && extension_type(&back, &family) == extension_type(&e, &family);
    let isomorphic = if is_indecomposable(&x)?.0 {
        Some(are_isomorphic(back.object(), &x)?)
    } else {
        None
    };
    let flat = d.is_flat();
    let nilpotent = data.radical_power_dims.last() == Some(&0);
    let round_trip = flat && nilpotent && order_preserved && isomorphic != Some(false) && back.object().dims() == x.dims();
    let order = e.order().iter().map(|&i| family.tag(i).to_string()).collect();
    let body = Body::Deform(DeformReport {
        input,
        order,
        trivial: d.is_trivial(),
        deformation: data,
        flat,
        nilpotent,
        order_preserved,
        isomorphic,
        round_trip,
    });
    let margin = window.map(|_| a.margin);
    Ok(Outcome {
        report: Report::new(Conventions::new(window, margin), body),
        code: u8::from(!round_trip),
    })
}

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use quadlie::algebra::{BilinearForm, LieAlgebra};
use quadlie::cohomology::{
    quadratic_differential_capped, standard_ce_differential_capped, BettiMethod, CochainComplex,
};
use quadlie::exterior::{masks_of_weight, DualBasisFrame, ExteriorForm};
use quadlie::families::{FamilyId, FamilySpec};
use quadlie::formulas::{
    betti_g2n2_cor25_table, betti_g2n2_pouseele_table, betti_g2n2_theorem2_table,
};
use quadlie::linalg::Subspace;
use quadlie::scalar::int;

use quadlie_cli::file::{export_algebra, parse_algebra_file, to_json, AlgebraInput};
use quadlie_cli::report::{H2Report, OutputFormat, ResultReport};
use quadlie_cli::verify::{run_suite, SuiteBounds};
use quadlie_cli::{CliError, CliResult};

/// Exact-arithmetic cohomology of Lie algebras over the rationals.
#[derive(Parser)]
#[command(name = "quadlie", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a Betti table for a family member or an algebra file.
    Betti(BettiArgs),
    /// Degree-2 cocycles, coboundaries and dim H^2.
    H2(H2Args),
    /// Run a verification suite (exit 1 when any check fails).
    Verify(VerifyArgs),
    /// Write a family member as an algebra description file.
    Export(ExportArgs),
}

#[derive(Args)]
struct SourceArgs {
    /// Family id: g2n2, jordan, heisenberg, f or g4n2.
    family: Option<String>,
    /// Size parameter n (all families except jordan).
    #[arg(long)]
    n: Option<usize>,
    /// Size parameter p (jordan).
    #[arg(long)]
    p: Option<usize>,
    /// Algebra description file (JSON) instead of a family.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args)]
struct BettiArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// bruteforce, theorem2, pouseele or cor25.
    #[arg(long, default_value = "bruteforce")]
    method: String,
    /// table, json or csv.
    #[arg(long, default_value = "table")]
    format: String,
    /// Truncate the brute-force computation at this degree.
    #[arg(long)]
    max_degree: Option<usize>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct H2Args {
    #[command(flatten)]
    source: SourceArgs,
    /// Use a synthetic form; only "identity" is recognized.
    #[arg(long)]
    form: Option<String>,
    #[arg(long, default_value = "table")]
    format: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// differentials, formulas, kernels, symplectic or appendix2.
    suite: String,
    #[arg(long, default_value_t = 3)]
    max_n: usize,
    #[arg(long, default_value_t = 2)]
    max_m: usize,
    #[arg(long, default_value_t = 3)]
    max_p: usize,
    #[arg(long, default_value = "table")]
    format: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExportArgs {
    /// Family id: g2n2, jordan, heisenberg, f or g4n2.
    family: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

struct Source {
    label: String,
    algebra: LieAlgebra,
    form: Option<BilinearForm>,
    is_g2n2: Option<usize>,
}

fn family_param(id: FamilyId, n: Option<usize>, p: Option<usize>) -> CliResult<usize> {
    match id {
        FamilyId::Jordan => {
            if n.is_some() {
                return Err(CliError::Input("family jordan takes --p, not --n".into()));
            }
            p.ok_or_else(|| CliError::Input("family jordan requires --p".into()))
        }
        _ => {
            if p.is_some() {
                return Err(CliError::Input(format!(
                    "family {} takes --n, not --p",
                    id.as_str()
                )));
            }
            n.ok_or_else(|| CliError::Input(format!("family {} requires --n", id.as_str())))
        }
    }
}

fn resolve_source(src: &SourceArgs) -> CliResult<Source> {
    match (&src.family, &src.file) {
        (Some(_), Some(_)) => Err(CliError::Input(
            "give either a family or --file, not both".into(),
        )),
        (None, None) => Err(CliError::Input(
            "missing input: give a family id or --file".into(),
        )),
        (Some(name), None) => {
            let id: FamilyId = name
                .parse()
                .map_err(|_| CliError::Input(format!("unknown family {name:?}")))?;
            let param = family_param(id, src.n, src.p)?;
            let inst = FamilySpec::new(id, param).build()?;
            Ok(Source {
                label: inst.label,
                algebra: inst.algebra,
                form: inst.form,
                is_g2n2: (id == FamilyId::G2n2).then_some(param),
            })
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
            let AlgebraInput {
                algebra,
                form,
                omega: _,
            } = parse_algebra_file(&text)?;
            let label = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "file".to_string());
            Ok(Source {
                label,
                algebra,
                form,
                is_g2n2: None,
            })
        }
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn build_complex(source: &Source, cap: usize) -> CliResult<(CochainComplex, &'static str)> {
    Ok(match &source.form {
        Some(b) => (
            quadratic_differential_capped(&source.algebra, b, cap)?,
            "quadratic",
        ),
        None => (
            standard_ce_differential_capped(&source.algebra, cap),
            "standard",
        ),
    })
}

fn cmd_betti(args: &BettiArgs) -> CliResult<()> {
    let format: OutputFormat = args.format.parse()?;
    let method: BettiMethod = args
        .method
        .parse()
        .map_err(|e: quadlie::Error| CliError::Input(e.to_string()))?;
    let start = Instant::now();
    let report = match method {
        BettiMethod::Bruteforce => {
            let source = resolve_source(&args.source)?;
            let cap = args
                .max_degree
                .unwrap_or(source.algebra.dim())
                .min(source.algebra.dim());
            let (complex, differential) = build_complex(&source, cap)?;
            ResultReport::from_complex(
                &source.label,
                differential,
                &complex,
                start.elapsed().as_millis(),
            )
        }
        closed => {
            let source = resolve_source(&args.source)?;
            let Some(n) = source.is_g2n2 else {
                return Err(CliError::Input(format!(
                    "method {} applies only to the g2n2 family",
                    args.method
                )));
            };
            let table = match closed {
                BettiMethod::Theorem2 => betti_g2n2_theorem2_table(n)?,
                BettiMethod::Cor25 => betti_g2n2_cor25_table(n)?,
                BettiMethod::Pouseele => betti_g2n2_pouseele_table(n)?,
                BettiMethod::Bruteforce => unreachable!(),
            };
            ResultReport::from_table(&table, start.elapsed().as_millis())
        }
    };
    emit(&report.render(format), args.out.as_ref())
}

fn basis_strings(frame: &DualBasisFrame, sub: &Subspace, dim: usize) -> Vec<String> {
    let masks = masks_of_weight(dim, 2);
    sub.basis()
        .iter()
        .map(|row| {
            let form = ExteriorForm::from_terms(
                dim,
                row.iter()
                    .enumerate()
                    .map(|(idx, c)| (masks[idx], c.clone())),
            );
            frame.display(&form).to_string()
        })
        .collect()
}

fn cmd_h2(args: &H2Args) -> CliResult<()> {
    let format: OutputFormat = args.format.parse()?;
    let source = resolve_source(&args.source)?;
    let form = match (&args.form, &source.form) {
        (Some(kind), _) => {
            if kind != "identity" {
                return Err(CliError::Input(format!(
                    "unknown --form {kind:?}; only \"identity\" is recognized"
                )));
            }
            let dim = source.algebra.dim();
            BilinearForm::symmetric(
                (0..dim)
                    .map(|i| (0..dim).map(|j| if i == j { int(1) } else { int(0) }).collect())
                    .collect(),
            )?
        }
        (None, Some(b)) => b.clone(),
        (None, None) => {
            return Err(CliError::Input(
                "no bilinear form: the input carries none and --form was not given".into(),
            ))
        }
    };
    let spaces = quadlie::cohomology::degree2_spaces(&source.algebra, &form)?;
    let frame = DualBasisFrame::of(&source.algebra);
    let dim = source.algebra.dim();
    let report = H2Report {
        algebra: source.label,
        z2_dim: spaces.cocycles.dim(),
        b2_dim: spaces.coboundaries.dim(),
        h2_dim: spaces.h2_dim,
        z2_basis: basis_strings(&frame, &spaces.cocycles, dim),
        b2_basis: basis_strings(&frame, &spaces.coboundaries, dim),
    };
    emit(&report.render(format), args.out.as_ref())
}

fn cmd_verify(args: &VerifyArgs) -> CliResult<bool> {
    let format: OutputFormat = args.format.parse()?;
    let report = run_suite(
        &args.suite,
        SuiteBounds {
            max_n: args.max_n,
            max_m: args.max_m,
            max_p: args.max_p,
        },
    )?;
    emit(&report.render(format), args.out.as_ref())?;
    Ok(report.passed())
}

fn cmd_export(args: &ExportArgs) -> CliResult<()> {
    let id: FamilyId = args
        .family
        .parse()
        .map_err(|_| CliError::Input(format!("unknown family {:?}", args.family)))?;
    let param = family_param(id, args.n, args.p)?;
    let inst = FamilySpec::new(id, param).build()?;
    let file = export_algebra(&inst.algebra, inst.form.as_ref(), inst.omega.as_ref());
    let mut text = to_json(&file);
    text.push('\n');
    emit(&text, args.out.as_ref())
}

fn run() -> CliResult<bool> {
    let cli = Cli::parse();
    match &cli.command {
        Command::Betti(args) => cmd_betti(args).map(|_| true),
        Command::H2(args) => cmd_h2(args).map(|_| true),
        Command::Verify(args) => cmd_verify(args),
        Command::Export(args) => cmd_export(args).map(|_| true),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

//! Command-line front end: Brauer table emission, Clifford correspondence
//! reports, and the verification suites.

use std::fmt::Write as _;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cliffmod::brauer::{brauer_table, enumerate_irreducibles, BrauerTable};
use cliffmod::clifford::{
    all_pass, clifford_correspondence, extension_search, green_verify, ClauseCheck,
    CliffordReport, ExtensionCase,
};
use cliffmod::group::{builders, suite_pair, Group, GroupElement};
use cliffmod::linalg::Matrix;
use cliffmod::sl2gl2::{
    compare_table, emit_reference_tables, expected_gl2f3_table, expected_sl2f3_table, pol_k,
    pol_k_r, verify_section2,
};
use cliffmod::structure::{are_isomorphic, is_irreducible};
use cliffmod::{make_field, Representation};

#[derive(Parser)]
#[command(name = "cliffmod", version, about = "Exact Clifford theory for modular representations of finite groups", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the Brauer character table of a group at a prime
    Table(TableArgs),
    /// Verify the Clifford correspondence over a normal subgroup pair
    Clifford(CliffordArgs),
    /// Run a named verification suite
    Verify(VerifyArgs),
    /// Verify the polynomial-module facts at one prime
    VerifySection2(Section2Args),
    /// Emit the reference tables for SL2/GL2 over F_3
    EmitTables(EmitArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct TableArgs {
    /// Group descriptor: SL2, GL2, or file:<path> (JSON generator matrices)
    #[arg(long)]
    group: String,
    /// The characteristic
    #[arg(long)]
    p: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Compare against the built-in reference values (exit 2 on mismatch)
    #[arg(long, value_parser = ["reference"])]
    expect: Option<String>,
    /// Write the rendered output to a file instead of stdout
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct CliffordArgs {
    /// Group descriptor: GL2, S4, A4, D8, C3xS3, or file:<path>
    #[arg(long)]
    group: String,
    /// Normal subgroup descriptor: SL2, A4, V4, C4, S3, or file:<path>
    #[arg(long)]
    normal: String,
    #[arg(long)]
    p: u64,
    /// Representation of the normal subgroup: polk:<k>, polkr:<k>:<r>,
    /// trivial, natural, or file:<path>; defaults to one per orbit of
    /// irreducibles
    #[arg(long)]
    sigma: Option<String>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Permit reducible polynomial modules (k >= p)
    #[arg(long)]
    allow_reducible: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name: reference (full) or quick (p = 3 only)
    #[arg(long, value_parser = ["reference", "quick"])]
    suite: String,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct Section2Args {
    #[arg(long)]
    p: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct EmitArgs {
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    out: Option<String>,
}

/// Input errors exit 1; check mismatches exit 2.
enum AppError {
    Input(String),
    Mismatch(String),
}

impl AppError {
    fn code(&self) -> u8 {
        match self {
            AppError::Input(_) => 1,
            AppError::Mismatch(_) => 2,
        }
    }
    fn message(&self) -> &str {
        match self {
            AppError::Input(m) | AppError::Mismatch(m) => m,
        }
    }
}

fn input<E: std::fmt::Display>(e: E) -> AppError {
    AppError::Input(e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version requests are not usage errors
            use clap::error::ErrorKind;
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(64),
            };
        }
    };
    let result = match cli.command {
        Command::Table(args) => cmd_table(args),
        Command::Clifford(args) => cmd_clifford(args),
        Command::Verify(args) => cmd_verify(args),
        Command::VerifySection2(args) => cmd_section2(args),
        Command::EmitTables(args) => cmd_emit_tables(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

// --- descriptors ---------------------------------------------------------

fn group_from_file(path: &str, p: u64, name: &str) -> Result<Group, AppError> {
    let text = std::fs::read_to_string(path).map_err(input)?;
    let gens: Vec<Vec<Vec<i64>>> = serde_json::from_str(&text).map_err(input)?;
    if gens.is_empty() {
        return Err(AppError::Input("no generator matrices in file".to_string()));
    }
    let ctx = Arc::new(make_field(p, 1, None).map_err(input)?);
    let n = gens[0].len();
    let elements: Vec<GroupElement> = gens
        .iter()
        .map(|rows| {
            let flat: Vec<i64> = rows.iter().flatten().copied().collect();
            if rows.len() != n || flat.len() != n * n {
                return Err(AppError::Input("generator matrices must be square and equal-sized".to_string()));
            }
            Ok(GroupElement { matrix: Matrix::from_ints(&ctx, n, n, &flat) })
        })
        .collect::<Result<_, _>>()?;
    Group::generate(elements, 1 << 20, name).map_err(input)
}

fn resolve_single(desc: &str, p: u64) -> Result<Arc<Group>, AppError> {
    match desc {
        "SL2" => Ok(Arc::new(builders::make_sl2(p).map_err(input)?)),
        "GL2" => Ok(Arc::new(builders::make_gl2(p).map_err(input)?)),
        other if other.starts_with("file:") => {
            Ok(Arc::new(group_from_file(&other[5..], p, "file-group")?))
        }
        other => Err(AppError::Input(format!(
            "unknown group descriptor `{other}` (expected SL2, GL2, or file:<path>)"
        ))),
    }
}

fn resolve_pair(
    gdesc: &str,
    ndesc: &str,
    p: u64,
) -> Result<(Arc<Group>, Arc<Group>), AppError> {
    let named = |suite: &str, fixed_p: u64| -> Result<(Arc<Group>, Arc<Group>), AppError> {
        if p != fixed_p {
            return Err(AppError::Input(format!(
                "pair {suite} is defined at p = {fixed_p}, got --p {p}"
            )));
        }
        let (g, n, _) = suite_pair(suite).map_err(input)?;
        Ok((Arc::new(g), Arc::new(n)))
    };
    match (gdesc, ndesc) {
        ("GL2", "SL2") => {
            let (g, n) = builders::make_gl2_sl2(p).map_err(input)?;
            Ok((Arc::new(g), Arc::new(n)))
        }
        ("S4", "A4") => named("S4/A4", 2),
        ("A4", "V4") => named("A4/V4", 2),
        ("D8", "C4") => named("D8/C4", 2),
        ("C3xS3", "S3") => named("C3xS3/S3", 3),
        (g, n) if g.starts_with("file:") && n.starts_with("file:") => {
            let big = Arc::new(group_from_file(&g[5..], p, "file-group")?);
            let small_gens = group_from_file(&n[5..], p, "file-normal")?;
            let mut gen_indices = Vec::new();
            for i in 0..small_gens.order() {
                let m = &small_gens.element(i).matrix;
                match big.index_of(&m.embed_into(big.ctx()).map_err(input)?) {
                    Some(idx) => gen_indices.push(idx),
                    None => {
                        return Err(AppError::Input(
                            "normal subgroup generators are not elements of the group"
                                .to_string(),
                        ))
                    }
                }
            }
            let small = Arc::new(big.subgroup(&gen_indices, "file-normal").map_err(input)?);
            Ok((big, small))
        }
        (g, n) => Err(AppError::Input(format!(
            "unknown pair `{g}`/`{n}` (expected GL2/SL2, S4/A4, A4/V4, D8/C4, C3xS3/S3, or file:/file:)"
        ))),
    }
}

fn resolve_sigma(
    desc: &str,
    small: &Arc<Group>,
    p: u64,
    seed: u64,
    allow_reducible: bool,
) -> Result<Representation, AppError> {
    let ctx = small.ctx().clone();
    let rep = match desc {
        "trivial" => Representation::trivial(small, &ctx),
        "natural" => Representation::natural(small, &ctx).map_err(input)?,
        other if other.starts_with("polk:") => {
            let k: usize = other[5..].parse().map_err(input)?;
            if k >= p as usize && !allow_reducible {
                return Err(AppError::Input(format!(
                    "polk:{k} is reducible at p = {p}; pass --allow-reducible to use it"
                )));
            }
            pol_k(small, &ctx, k).map_err(input)?
        }
        other if other.starts_with("polkr:") => {
            let parts: Vec<&str> = other[6..].split(':').collect();
            if parts.len() != 2 {
                return Err(AppError::Input("expected polkr:<k>:<r>".to_string()));
            }
            let k: usize = parts[0].parse().map_err(input)?;
            let r: u64 = parts[1].parse().map_err(input)?;
            if k >= p as usize && !allow_reducible {
                return Err(AppError::Input(format!(
                    "polkr:{k}:{r} is reducible at p = {p}; pass --allow-reducible to use it"
                )));
            }
            pol_k_r(small, &ctx, k, r).map_err(input)?
        }
        other if other.starts_with("file:") => {
            let text = std::fs::read_to_string(&other[5..]).map_err(input)?;
            let images: Vec<Vec<Vec<i64>>> = serde_json::from_str(&text).map_err(input)?;
            if images.len() != small.gens().len() {
                return Err(AppError::Input(format!(
                    "expected {} generator images, got {}",
                    small.gens().len(),
                    images.len()
                )));
            }
            let d = images.first().map(|m| m.len()).unwrap_or(0);
            let mats: Vec<Matrix> = images
                .iter()
                .map(|rows| {
                    let flat: Vec<i64> = rows.iter().flatten().copied().collect();
                    Matrix::from_ints(&ctx, d, d, &flat)
                })
                .collect();
            Representation::from_generator_images(small, &ctx, &mats, "file-rep")
                .map_err(input)?
        }
        other => {
            return Err(AppError::Input(format!(
                "unknown representation descriptor `{other}`"
            )))
        }
    };
    if !is_irreducible(&rep, seed).map_err(input)? {
        return Err(AppError::Input(format!(
            "representation `{desc}` is not irreducible over its coefficient field"
        )));
    }
    Ok(rep)
}

/// One irreducible of N per conjugation orbit under G.
fn orbit_representatives(
    big: &Arc<Group>,
    small: &Arc<Group>,
    p: u64,
    seed: u64,
) -> Result<Vec<Representation>, AppError> {
    let (_, irr) = enumerate_irreducibles(small, p, seed).map_err(input)?;
    let cosets = big.coset_reps(small).map_err(input)?;
    let mut kept: Vec<Representation> = Vec::new();
    'next: for sigma in irr {
        for prev in &kept {
            for &t in &cosets.reps {
                let conj = prev.conjugate(big, t).map_err(input)?;
                if are_isomorphic(&conj, &sigma).map_err(input)? {
                    continue 'next;
                }
            }
        }
        kept.push(sigma);
    }
    Ok(kept)
}

// --- output --------------------------------------------------------------

fn emit(rendered: String, out: &Option<String>) -> Result<(), AppError> {
    match out {
        Some(path) => {
            std::fs::write(path, rendered).map_err(input)?;
            println!("wrote {path}");
            Ok(())
        }
        None => {
            println!("{rendered}");
            Ok(())
        }
    }
}

fn render_table_text(t: &BrauerTable) -> String {
    let mut cells: Vec<Vec<String>> = Vec::new();
    let mut head = vec!["order".to_string()];
    head.extend(t.classes.iter().map(|c| c.order.to_string()));
    cells.push(head);
    let mut sizes = vec!["size".to_string()];
    sizes.extend(t.classes.iter().map(|c| c.size.to_string()));
    cells.push(sizes);
    for row in &t.rows {
        let mut line = vec![row.label.clone()];
        line.extend(row.display.iter().cloned());
        cells.push(line);
    }
    let cols = cells[0].len();
    let widths: Vec<usize> = (0..cols)
        .map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(0))
        .collect();
    let mut out = format!(
        "Brauer table of {} (order {}) at p = {}, conductor {}\n",
        t.group, t.order, t.p, t.conductor
    );
    for row in &cells {
        let mut line = String::new();
        for (j, cell) in row.iter().enumerate() {
            if j == 0 {
                let _ = write!(line, "{cell:<w$} |", w = widths[0]);
            } else {
                let _ = write!(line, " {cell:>w$}", w = widths[j]);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn render_table_csv(t: &BrauerTable) -> String {
    let mut out = String::new();
    let order: Vec<String> = t.classes.iter().map(|c| c.order.to_string()).collect();
    let size: Vec<String> = t.classes.iter().map(|c| c.size.to_string()).collect();
    let _ = writeln!(out, "order,{}", order.join(","));
    let _ = writeln!(out, "size,{}", size.join(","));
    for row in &t.rows {
        let _ = writeln!(out, "{},{}", row.label, row.display.join(","));
    }
    out
}

fn render_checks_text(checks: &[ClauseCheck]) -> String {
    let mut out = String::new();
    for c in checks {
        let mark = if c.pass { "PASS" } else { "FAIL" };
        if c.detail.is_empty() {
            let _ = writeln!(out, "{mark} {}", c.clause);
        } else {
            let _ = writeln!(out, "{mark} {} ({})", c.clause, c.detail);
        }
    }
    out
}

fn render_checks_csv(checks: &[ClauseCheck]) -> String {
    let mut out = String::from("clause,pass,detail\n");
    for c in checks {
        let _ = writeln!(out, "\"{}\",{},\"{}\"", c.clause, c.pass, c.detail);
    }
    out
}

fn to_json<T: Serialize>(value: &T) -> Result<String, AppError> {
    serde_json::to_string_pretty(value).map_err(input)
}

#[derive(Serialize)]
struct VerifySummary {
    schema: String,
    suite: String,
    seed: u64,
    checks: Vec<ClauseCheck>,
}

fn emit_summary(
    suite: &str,
    seed: u64,
    checks: Vec<ClauseCheck>,
    format: Format,
    out: &Option<String>,
) -> Result<(), AppError> {
    let passed = all_pass(&checks);
    let failed = checks.iter().filter(|c| !c.pass).count();
    let rendered = match format {
        Format::Text => {
            let mut s = render_checks_text(&checks);
            let _ = write!(s, "{} checks, {} failed", checks.len(), failed);
            s
        }
        Format::Csv => render_checks_csv(&checks),
        Format::Json => to_json(&VerifySummary {
            schema: "verify-summary/1".to_string(),
            suite: suite.to_string(),
            seed,
            checks,
        })?,
    };
    emit(rendered, out)?;
    if passed {
        Ok(())
    } else {
        Err(AppError::Mismatch(format!("{failed} check(s) failed")))
    }
}

// --- commands ------------------------------------------------------------

fn cmd_table(args: TableArgs) -> Result<(), AppError> {
    let group = resolve_single(&args.group, args.p)?;
    let table = brauer_table(&group, args.p, args.seed).map_err(input)?;
    let rendered = match args.format {
        Format::Text => render_table_text(&table),
        Format::Csv => render_table_csv(&table),
        Format::Json => to_json(&table)?,
    };
    emit(rendered, &args.out)?;
    if args.expect.is_some() {
        let expected = match (args.group.as_str(), args.p) {
            ("SL2", 3) => expected_sl2f3_table(),
            ("GL2", 3) => expected_gl2f3_table(),
            _ => {
                return Err(AppError::Input(format!(
                    "no reference values for {} at p = {}",
                    args.group, args.p
                )))
            }
        };
        compare_table(&table, &expected).map_err(AppError::Mismatch)?;
        println!("table matches the reference values");
    }
    Ok(())
}

#[derive(Serialize)]
struct CliffordBatch {
    schema: String,
    seed: u64,
    reports: Vec<CliffordReport>,
}

fn render_report_text(r: &CliffordReport) -> String {
    let mut out = format!(
        "{} over {} at p = {}: sigma = {} (degree {}), inertia order {}, [I:N] = {}, orbit size {}\n",
        r.group, r.normal, r.p, r.sigma_label, r.sigma_degree, r.inertia_order,
        r.inertia_index_d, r.orbit_size
    );
    for e in &r.correspondence {
        let target = e
            .ghat_index
            .map(|i| r.ghat[i].label.clone())
            .unwrap_or_else(|| "<unmatched>".to_string());
        let _ = writeln!(
            out,
            "  {} (degree {}, m = {}) -> {} (degree {})",
            e.phi_label, e.phi_degree, e.m_phi, target, e.ind_degree
        );
    }
    out.push_str(&render_checks_text(&r.checks));
    out
}

fn cmd_clifford(args: CliffordArgs) -> Result<(), AppError> {
    let (big, small) = resolve_pair(&args.group, &args.normal, args.p)?;
    if !big.is_normal(&small).map_err(input)? {
        return Err(AppError::Input("subgroup is not normal".to_string()));
    }
    let sigmas = match &args.sigma {
        Some(desc) => {
            vec![resolve_sigma(desc, &small, args.p, args.seed, args.allow_reducible)?]
        }
        None => orbit_representatives(&big, &small, args.p, args.seed)?,
    };
    let mut reports = Vec::new();
    for sigma in &sigmas {
        reports.push(
            clifford_correspondence(sigma, &big, args.p, args.seed).map_err(input)?,
        );
    }
    let rendered = match args.format {
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                s.push_str(&render_report_text(r));
                s.push('\n');
            }
            s.pop();
            s
        }
        Format::Csv => {
            let mut s = String::from("sigma,clause,pass,detail\n");
            for r in &reports {
                for c in &r.checks {
                    let _ = writeln!(
                        s,
                        "\"{}\",\"{}\",{},\"{}\"",
                        r.sigma_label, c.clause, c.pass, c.detail
                    );
                }
            }
            s
        }
        Format::Json => to_json(&CliffordBatch {
            schema: "clifford-report/1".to_string(),
            seed: args.seed,
            reports: reports.clone(),
        })?,
    };
    emit(rendered, &args.out)?;
    let failed: usize =
        reports.iter().map(|r| r.checks.iter().filter(|c| !c.pass).count()).sum();
    if failed == 0 {
        Ok(())
    } else {
        Err(AppError::Mismatch(format!("{failed} clause(s) failed")))
    }
}

fn prefixed(prefix: &str, checks: Vec<ClauseCheck>) -> Vec<ClauseCheck> {
    checks
        .into_iter()
        .map(|c| ClauseCheck::new(&format!("{prefix}: {}", c.clause), c.pass, c.detail))
        .collect()
}

fn suite_tables(seed: u64, checks: &mut Vec<ClauseCheck>) -> Result<(), AppError> {
    let sl2 = Arc::new(builders::make_sl2(3).map_err(input)?);
    let gl2 = Arc::new(builders::make_gl2(3).map_err(input)?);
    let t1 = brauer_table(&sl2, 3, seed).map_err(input)?;
    let c1 = compare_table(&t1, &expected_sl2f3_table());
    checks.push(ClauseCheck::new(
        "table SL2 p=3 matches reference",
        c1.is_ok(),
        c1.err().unwrap_or_default(),
    ));
    let t2 = brauer_table(&gl2, 3, seed).map_err(input)?;
    let c2 = compare_table(&t2, &expected_gl2f3_table());
    checks.push(ClauseCheck::new(
        "table GL2 p=3 matches reference",
        c2.is_ok(),
        c2.err().unwrap_or_default(),
    ));
    Ok(())
}

fn suite_pair_reports(
    name: &str,
    seed: u64,
    checks: &mut Vec<ClauseCheck>,
) -> Result<(), AppError> {
    let (big, small, p) = suite_pair(name).map_err(input)?;
    let (big, small) = (Arc::new(big), Arc::new(small));
    for sigma in orbit_representatives(&big, &small, p, seed)? {
        let report = clifford_correspondence(&sigma, &big, p, seed).map_err(input)?;
        let label = format!("{name} sigma={}", report.sigma_label);
        checks.extend(prefixed(&label, report.checks));
    }
    Ok(())
}

fn suite_green_and_experiments(
    seed: u64,
    checks: &mut Vec<ClauseCheck>,
) -> Result<(), AppError> {
    let (g, s3, p) = suite_pair("C3xS3/S3").map_err(input)?;
    let (g, s3) = (Arc::new(g), Arc::new(s3));
    let (_, g_irr) = enumerate_irreducibles(&g, p, seed).map_err(input)?;
    for theta in &g_irr {
        let res = theta.restrict(&s3).map_err(input)?;
        if is_irreducible(&res, seed).map_err(input)? {
            let gc = green_verify(&g, &s3, theta, p, seed).map_err(input)?;
            checks.extend(prefixed(
                &format!("p-group quotient C3xS3/S3 theta={}", theta.label()),
                gc,
            ));
        }
    }
    // extension experiments: recorded observations, not theorem checks
    let (gl2, sl2, p) = suite_pair("GL2F3/SL2F3").map_err(input)?;
    let (gl2, sl2) = (Arc::new(gl2), Arc::new(sl2));
    for k in 0..3usize {
        let sigma = pol_k(&sl2, &sl2.ctx().clone(), k).map_err(input)?;
        let outcome = extension_search(&sigma, &gl2, p, ExtensionCase::CyclicQuotient, seed)
            .map_err(input)?;
        checks.push(ClauseCheck::new(
            &format!("experiment cyclic-quotient GL2F3/SL2F3 sigma=Pol_{k}"),
            outcome.found,
            format!("extension found: {:?}", outcome.theta_label),
        ));
    }
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> Result<(), AppError> {
    let mut checks = Vec::new();
    suite_tables(args.seed, &mut checks)?;
    checks.extend(prefixed(
        "section2 p=3",
        verify_section2(3, args.seed).map_err(input)?,
    ));
    suite_pair_reports("GL2F3/SL2F3", args.seed, &mut checks)?;
    if args.suite == "reference" {
        checks.extend(prefixed(
            "section2 p=5",
            verify_section2(5, args.seed).map_err(input)?,
        ));
        for pair in ["S4/A4", "A4/V4", "D8/C4", "C3xS3/S3"] {
            suite_pair_reports(pair, args.seed, &mut checks)?;
        }
        suite_green_and_experiments(args.seed, &mut checks)?;
    }
    emit_summary(&args.suite, args.seed, checks, args.format, &args.out)
}

fn cmd_section2(args: Section2Args) -> Result<(), AppError> {
    let checks = verify_section2(args.p, args.seed).map_err(input)?;
    emit_summary(
        &format!("section2-p{}", args.p),
        args.seed,
        checks,
        args.format,
        &args.out,
    )
}

fn cmd_emit_tables(args: EmitArgs) -> Result<(), AppError> {
    let report = emit_reference_tables(args.seed).map_err(input)?;
    let rendered = match args.format {
        Format::Text => {
            let mut s = render_table_text(&report.sl2);
            s.push('\n');
            s.push_str(&render_table_text(&report.gl2));
            s.push('\n');
            s.push_str(&render_checks_text(&report.induction));
            s.push_str(&render_checks_text(&report.checks));
            s
        }
        Format::Csv => {
            let mut s = render_table_csv(&report.sl2);
            s.push('\n');
            s.push_str(&render_table_csv(&report.gl2));
            s
        }
        Format::Json => to_json(&report)?,
    };
    emit(rendered, &args.out)?;
    if report.passed() {
        Ok(())
    } else {
        Err(AppError::Mismatch("reference tables did not verify".to_string()))
    }
}

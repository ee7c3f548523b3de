use std::borrow::Cow;
use std::fmt;
use std::path::Path;

use ineqcert::catalog::{load_builtin, parse_statement_file, Catalog, GapKind, InequalityRecord, CONSTANTS};
use ineqcert::certify::{
    check_gap, check_root, check_value, verify_inequality, verify_monotone, Certificate, Config, Side, Status,
};
use ineqcert::error::CertifyError;
use ineqcert::interval::Interval;
use ineqcert::series::{series, SeriesName};
use serde_json::json;

use crate::{exit, report, Cli, Command, Format};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Data(String),
    Io(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Data(_) => exit::DATA,
            CliError::Io(_) => exit::IO,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(s) | CliError::Data(s) | CliError::Io(s) => f.write_str(s),
        }
    }
}

impl From<CertifyError> for CliError {
    fn from(e: CertifyError) -> Self {
        CliError::Data(e.to_string())
    }
}

pub fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

pub fn write(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn catalog(cli: &Cli) -> Result<Cow<'static, Catalog>, CliError> {
    let Some(path) = &cli.catalog else { return Ok(Cow::Borrowed(load_builtin())) };
    let src = read(path)?;
    let mut cat = load_builtin().clone();
    cat.extend_from_str(&src).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    Ok(Cow::Owned(cat))
}

/// Default configuration with `INEQCERT_MAX_DEPTH` and flag overrides.
pub fn config(depth: Option<u32>, delta: Option<f64>) -> Result<Config, CliError> {
    let mut cfg = Config::default();
    if let Ok(v) = std::env::var("INEQCERT_MAX_DEPTH") {
        cfg.max_depth = v.trim().parse().map_err(|_| CliError::Usage(format!("INEQCERT_MAX_DEPTH: bad value `{v}`")))?;
    }
    if let Some(d) = depth {
        cfg.max_depth = d;
    }
    if let Some(d) = delta {
        if !(d.is_finite() && d > 0.0) {
            return Err(CliError::Usage(format!("--delta must be positive, got {d}")));
        }
        cfg.delta = d;
    }
    Ok(cfg)
}

pub fn status_code(s: Status) -> u8 {
    match s {
        Status::Proven | Status::ProvenOnTruncation => exit::OK,
        Status::Refuted => exit::REFUTED,
        Status::Inconclusive => exit::INCONCLUSIVE,
    }
}

pub fn run(cli: &Cli) -> Result<u8, CliError> {
    match &cli.command {
        Command::List { filter } => list(&*catalog(cli)?, filter.map(|s| s.number())),
        Command::Show { id } => show(&*catalog(cli)?, id),
        Command::Verify { id, depth, delta, json } => {
            let cfg = config(*depth, *delta)?;
            verify(&*catalog(cli)?, id, &cfg, json.as_deref())
        }
        Command::VerifyAll { jobs, out } => {
            if *jobs == 0 {
                return Err(CliError::Usage("--jobs must be at least 1".into()));
            }
            report::verify_all(&*catalog(cli)?, &config(None, None)?, *jobs, out.as_deref())
        }
        Command::Constants => constants(),
        Command::Roots => roots(&*catalog(cli)?),
        Command::Gaps => gaps(&*catalog(cli)?, &config(None, None)?),
        Command::Series { name, terms, format } => dump_series(name, *terms, *format),
        Command::Check { file } => check(file, &config(None, None)?),
        Command::Parse { check } => parse_only(check),
    }
}

fn list(cat: &Catalog, section: Option<u8>) -> Result<u8, CliError> {
    for r in cat.list(section) {
        let sec = r.section.map(|s| format!("sec{s}")).unwrap_or_else(|| "user".into());
        let cite = r.citation.map(|c| format!("\\label{{{}}}", c.label)).unwrap_or_default();
        println!("{:<28} {:<11} {:<5} {}", r.id, "inequality", sec, cite);
    }
    if section.is_none() {
        for m in &cat.monotone {
            println!("{:<28} {:<11} {:<5} \\label{{{}}}", m.id, "monotone", "-", m.citation.label);
        }
    }
    Ok(exit::OK)
}

fn show(cat: &Catalog, id: &str) -> Result<u8, CliError> {
    if let Ok(r) = cat.get(id) {
        let s = &r.stmt;
        println!("id:        {}", r.id);
        println!("statement: {}", r.text);
        println!("domain:    [{}, {}]", s.lo.expr, s.hi.expr);
        if let Some((a, b)) = &r.truncation {
            println!("certified: [{}, {}] (truncation)", a.expr, b.expr);
        }
        let sharp: Vec<String> = s.sharp.iter().map(|p| p.expr.to_string()).collect();
        println!("sharp:     {{{}}}", sharp.join(", "));
        println!("expected:  {}", r.expected.as_str());
        if let Some(sec) = r.section {
            println!("section:   {sec}");
        }
        if let Some(c) = r.citation {
            println!("label:     {}", c.label);
            println!("quote:     {}", c.quote);
        }
        if let Some(n) = &r.note {
            println!("note:      {n}");
        }
        return Ok(exit::OK);
    }
    let m = cat.monotone(id).map_err(|e| CliError::Usage(e.to_string()))?;
    println!("id:        {}", m.id);
    println!("function:  {}", m.text);
    println!("domain:    [{}, {}]", m.domain.0.expr, m.domain.1.expr);
    println!("direction: {}", format!("{:?}", m.direction).to_lowercase());
    println!("limits:    {} .. {}", m.limits.0.expr, m.limits.1.expr);
    println!("label:     {}", m.citation.label);
    println!("quote:     {}", m.citation.quote);
    if let Some(n) = m.note {
        println!("note:      {n}");
    }
    Ok(exit::OK)
}

fn iv(x: &Interval) -> String {
    format!("[{:?}, {:?}]", x.lo(), x.hi())
}

pub fn print_certificate(c: &Certificate) {
    let zones = c.exclusions.len();
    println!(
        "{}: {} ({} cells, {} zone{}, depth {})",
        c.id,
        c.status.as_str(),
        c.cells.len(),
        zones,
        if zones == 1 { "" } else { "s" },
        c.depth
    );
    println!("  domain [{:?}, {:?}]", c.domain.0 .0, c.domain.1 .0);
    for z in &c.exclusions {
        let side = match z.side {
            Side::Left => "left",
            Side::Right => "right",
        };
        println!(
            "  zone {side} of [{:?}, {:?}]: [{:?}, {:?}], order {}, g_{} in [{:?}, {:?}]",
            z.point_lo.0, z.point_hi.0, z.lo.0, z.hi.0, z.order, z.order, z.coeff_lo.0, z.coeff_hi.0
        );
    }
    if let Some(cx) = &c.counterexample {
        println!("  counterexample x = {:?}, difference in [{:?}, {:?}]", cx.x.0, cx.value_lo.0, cx.value_hi.0);
        if let (Some(l), Some(r)) = (cx.lhs, cx.rhs) {
            println!("    lhs in [{:?}, {:?}], rhs in [{:?}, {:?}]", l.0 .0, l.1 .0, r.0 .0, r.1 .0);
        }
    }
    if let Some((a, b)) = c.worst_cell {
        println!("  worst cell [{:?}, {:?}]", a.0, b.0);
    }
    for n in &c.notes {
        println!("  note: {n}");
    }
}

fn verify(cat: &Catalog, id: &str, cfg: &Config, json: Option<&Path>) -> Result<u8, CliError> {
    let (cert, code) = if let Ok(r) = cat.get(id) {
        let c = verify_inequality(r, cfg)?;
        print_certificate(&c);
        let code = status_code(c.status);
        (c, code)
    } else if let Ok(m) = cat.monotone(id) {
        let rep = verify_monotone(m, cfg)?;
        print_certificate(&rep.certificate);
        println!(
            "  limits {} and {}, expected {} and {}",
            iv(&rep.left_limit),
            iv(&rep.right_limit),
            m.limits.0.expr,
            m.limits.1.expr
        );
        let mut code = status_code(rep.certificate.status);
        if code == exit::OK && !rep.limits_ok {
            println!("  limits do not match");
            code = exit::MISMATCH;
        }
        (rep.certificate, code)
    } else {
        return Err(CliError::Usage(format!("unknown record `{id}`")));
    };
    if let Some(p) = json {
        write(p, &(cert.to_json() + "\n"))?;
    }
    Ok(code)
}

fn constants() -> Result<u8, CliError> {
    let mut all_ok = true;
    println!("{:<20} {:<32} {:<42} {:>9} {:>9} ok", "id", "definition", "enclosure", "reference", "|diff|");
    for c in CONSTANTS {
        let (enc, d) = c.deviation();
        let ok = d <= c.tolerance;
        all_ok &= ok;
        println!("{:<20} {:<32} {:<42} {:>9} {:>9.2e} {}", c.id, c.definition, iv(&enc), c.reference, d, yes(ok));
    }
    for c in CONSTANTS {
        if let Some(n) = c.note {
            println!("note {}: {n}", c.id);
        }
    }
    Ok(if all_ok { exit::OK } else { exit::MISMATCH })
}

fn yes(ok: bool) -> &'static str {
    if ok {
        "yes"
    } else {
        "no"
    }
}

fn roots(cat: &Catalog) -> Result<u8, CliError> {
    let mut all_ok = true;
    for r in &cat.roots {
        let c = check_root(r)?;
        all_ok &= c.pass;
        println!("{:<22} {:<42} reference {} +- {:e} {}", r.id, iv(&c.enclosure), r.reference, r.tolerance, yes(c.pass));
    }
    for v in &cat.values {
        let c = check_value(v, cat)?;
        all_ok &= c.pass;
        println!("{:<22} {:<42} reference {} +- {:e} {}", v.id, iv(&c.enclosure), v.expected.expr, v.tolerance, yes(c.pass));
    }
    Ok(if all_ok { exit::OK } else { exit::MISMATCH })
}

fn gaps(cat: &Catalog, cfg: &Config) -> Result<u8, CliError> {
    let mut all_ok = true;
    println!("claim,kind,ref_lo,ref_hi,grid_max,argmax,max_lo,max_hi,pass");
    for g in &cat.gaps {
        let c = check_gap(g, cfg)?;
        all_ok &= c.pass;
        let (kind, lo, hi) = match g.kind {
            GapKind::Below(b) => ("below", String::new(), format!("{b:?}")),
            GapKind::MaxWithin(a, b) => ("max_within", format!("{a:?}"), format!("{b:?}")),
            GapKind::BelowSquare => ("below_square", String::new(), "x^2".into()),
        };
        let s = &c.scan;
        println!(
            "{},{kind},{lo},{hi},{:?},{:?},{:?},{:?},{}",
            g.id,
            s.max_gap,
            s.argmax,
            s.refined.lo(),
            s.refined.hi(),
            yes(c.pass)
        );
    }
    Ok(if all_ok { exit::OK } else { exit::MISMATCH })
}

fn dump_series(name: &str, terms: usize, format: Format) -> Result<u8, CliError> {
    let n: SeriesName = name.parse().map_err(|e: ineqcert::error::SeriesError| CliError::Usage(e.to_string()))?;
    let s = series(n, terms).map_err(|e| CliError::Usage(e.to_string()))?;
    let rows: Vec<(usize, String, String)> = std::iter::once(&s.constant_term)
        .chain(&s.coeffs)
        .enumerate()
        .map(|(i, q)| (i, q.numer().to_string(), q.denom().to_string()))
        .collect();
    match format {
        Format::Csv => {
            println!("n,numerator,denominator");
            for (i, p, q) in rows {
                println!("{i},{p},{q}");
            }
        }
        Format::Json => {
            let coeffs: Vec<_> =
                rows.into_iter().map(|(i, p, q)| json!({"n": i, "numerator": p, "denominator": q})).collect();
            let radius = if s.radius.is_finite() { json!(s.radius) } else { json!(null) };
            let doc = json!({
                "schema": "ineqcert.series/1",
                "name": n.as_str(),
                "terms": terms,
                "radius": radius,
                "coefficients": coeffs,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
        }
    }
    Ok(exit::OK)
}

fn parse_file(path: &Path) -> Result<Vec<InequalityRecord>, CliError> {
    let src = read(path)?;
    parse_statement_file(&src).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn check(path: &Path, cfg: &Config) -> Result<u8, CliError> {
    let mut worst = exit::OK;
    for r in parse_file(path)? {
        let c = verify_inequality(&r, cfg)?;
        print_certificate(&c);
        worst = match (worst, status_code(c.status)) {
            (exit::REFUTED, _) | (_, exit::REFUTED) => exit::REFUTED,
            (exit::INCONCLUSIVE, _) | (_, exit::INCONCLUSIVE) => exit::INCONCLUSIVE,
            _ => exit::OK,
        };
    }
    Ok(worst)
}

fn parse_only(path: &Path) -> Result<u8, CliError> {
    let recs = parse_file(path)?;
    for r in &recs {
        println!("{}: {}", r.id, r.stmt);
    }
    println!("{} statement{} ok", recs.len(), if recs.len() == 1 { "" } else { "s" });
    Ok(exit::OK)
}

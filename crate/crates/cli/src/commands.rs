use std::collections::BTreeSet;
use std::fmt;
use std::fs::{self, OpenOptions};
use std::io::{self, BufRead, BufReader, Read, Write};
use std::path::Path;

use tindex_core::canon::{certificate, DEFAULT_LIMIT};
use tindex_core::constructors::{self, b_graph, BkSpec, CoreVertex, DecoratedCore};
use tindex_core::extremal::{closed_form, reconcile};
use tindex_core::graph6;
use tindex_core::oracle::{theorem_ks, Catalog, OracleConfig, VerificationReport};
use tindex_core::transforms::{
    check_lemma3, check_lemma4, check_lemma5, monotonicity_probe, CutEdgeContext, Expectation,
    TransformReport,
};
use tindex_core::{Error, Graph, IndexKind, IndexValues};

use crate::output::{Format, Row, Table};
use crate::{
    BoundArgs, ClosedFormArgs, Command, ConstructArgs, ConstructKind, CoreArgs, EnumerateArgs,
    IndicesArgs, OracleArgs, ProbeArgs, ProbeKind, TableArgs, VerifyArgs,
};

pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    /// The reader of stdout went away.
    BrokenPipe,
    Infeasible(String),
    Mismatch(String),
}

impl CliError {
    pub fn is_broken_pipe(&self) -> bool {
        matches!(self, CliError::BrokenPipe)
    }

    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::BrokenPipe => 1,
            CliError::Infeasible(_) => 2,
            CliError::Mismatch(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Infeasible(m) | CliError::Mismatch(m) => f.write_str(m),
            CliError::BrokenPipe => f.write_str("broken pipe"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Infeasible(_)
            | Error::Hypothesis(_)
            | Error::EmptyClass { .. }
            | Error::TooLarge { .. }
            | Error::Disconnected
            | Error::NotBipartite => CliError::Infeasible(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            return CliError::BrokenPipe;
        }
        CliError::Usage(format!("i/o error: {e}"))
    }
}

type Result<T> = std::result::Result<T, CliError>;

pub fn run(command: Command) -> Result<()> {
    match command {
        Command::Indices(a) => indices(a),
        Command::Construct(a) => construct(a),
        Command::Bound(a) => bound(a),
        Command::ClosedForm(a) => closed_form_cmd(a),
        Command::Table(a) => table(a),
        Command::Verify(a) => verify(a),
        Command::Enumerate(a) => enumerate(a),
        Command::Probe(a) => probe(a),
    }
}

fn emit(table: &Table, format: Format) -> Result<()> {
    if format == Format::Graph6 {
        return Err(CliError::Usage(
            "graph6 output is only available for graph-valued commands".into(),
        ));
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    table.write(format, &mut out)?;
    out.flush()?;
    Ok(())
}

fn index_cells(row: Row, kinds: &[IndexKind], values: Option<&IndexValues>) -> Row {
    kinds.iter().fold(row, |row, &kind| {
        let tag = kind.tag();
        match (kind, values) {
            (IndexKind::Harary | IndexKind::Cei, Some(v)) => row.rational(tag, &v.get(kind)),
            (IndexKind::Harary | IndexKind::Cei, None) => row.blank_rational(tag),
            (_, Some(v)) => row.big(tag, v.get(kind).numer()),
            (_, None) => row.set(tag, ""),
        }
    })
}

fn indices(args: IndicesArgs) -> Result<()> {
    let mut text = String::new();
    match &args.input {
        Some(path) => {
            text = fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?
        }
        None => {
            io::stdin().read_to_string(&mut text)?;
        }
    }
    let mut graphs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let g =
            graph6::decode(line).map_err(|e| CliError::Usage(format!("line {}: {e}", i + 1)))?;
        graphs.push((i + 1, g));
    }
    let kinds = args.index.kinds();
    let mut columns = vec!["line", "n", "m"];
    for kind in &kinds {
        match kind {
            IndexKind::Harary => columns.extend(["H_num", "H_den", "H_decimal"]),
            IndexKind::Cei => columns.extend(["CEI_num", "CEI_den", "CEI_decimal"]),
            other => columns.push(other.tag()),
        }
    }
    columns.push("error");
    let mut table = Table::new(&columns);
    for (line, g) in graphs {
        let row = Row::new().set("line", line).set("n", g.n()).set("m", g.m());
        let row = match IndexValues::of(&g) {
            Ok(v) => index_cells(row, &kinds, Some(&v)).set("error", ""),
            Err(e) => index_cells(row, &kinds, None).set("error", e.to_string()),
        };
        table.push(row);
    }
    emit(&table, args.format)
}

fn construct(args: ConstructArgs) -> Result<()> {
    let (label, g) = match args.kind {
        ConstructKind::Star { n } => (format!("S_{n}"), constructors::star(n)?),
        ConstructKind::Kst { s, t } => (
            format!("K_{{{s},{t}}}"),
            constructors::complete_bipartite(s, t)?,
        ),
        ConstructKind::Bk { n, k, x } => {
            let spec = BkSpec::new(n, k, x)?;
            (spec.to_string(), b_graph(spec))
        }
    };
    let text = graph6::encode(&g);
    if args.format == Format::Graph6 {
        println!("{text}");
        return Ok(());
    }
    let cert = if g.n() <= DEFAULT_LIMIT {
        certificate(&g)?.to_string()
    } else {
        String::new()
    };
    let mut table = Table::new(&[]);
    table.push(
        Row::new()
            .set("graph", label)
            .set("n", g.n())
            .set("m", g.m())
            .set("bridges", g.bridges().len())
            .set("graph6", text)
            .set("certificate", cert),
    );
    emit(&table, args.format)
}

fn join_x(xs: &[usize]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(";")
}

fn bound_row(kind: IndexKind, n: usize, k: usize) -> Result<Row> {
    let rec = reconcile(kind, n, k)?;
    let b = &rec.bound;
    let (clause, relation) = match &rec.printed {
        Some(p) => (p.label.to_string(), p.relation.symbol()),
        None => (String::new(), ""),
    };
    Ok(Row::new()
        .set("n", n)
        .set("k", k)
        .set("index", kind.tag())
        .set("direction", b.direction.as_str())
        .rational("value", &b.value)
        .set("optimal_x", join_x(&b.optimal_x))
        .set(
            "family",
            b.family
                .iter()
                .map(|f| f.to_string())
                .collect::<Vec<_>>()
                .join(";"),
        )
        .set("clause", clause)
        .set("printed_relation", relation)
        .set("reconcile", rec.status()))
}

const BOUND_COLUMNS: [&str; 12] = [
    "n",
    "k",
    "index",
    "direction",
    "value_num",
    "value_den",
    "value_decimal",
    "optimal_x",
    "family",
    "clause",
    "printed_relation",
    "reconcile",
];

fn bound(args: BoundArgs) -> Result<()> {
    let mut table = Table::new(&BOUND_COLUMNS);
    for kind in args.index.kinds() {
        table.push(bound_row(kind, args.n, args.k)?);
    }
    emit(&table, args.format)
}

fn table(args: TableArgs) -> Result<()> {
    let mut table = Table::new(&BOUND_COLUMNS);
    for n in args.n.iter() {
        for kind in args.index.kinds() {
            for k in theorem_ks(n) {
                table.push(bound_row(kind, n, k)?);
            }
        }
    }
    emit(&table, args.format)
}

fn closed_form_cmd(args: ClosedFormArgs) -> Result<()> {
    let mut table = Table::new(&[]);
    for kind in args.index.kinds() {
        let v = closed_form(kind, args.n, args.k, args.x)?;
        table.push(
            Row::new()
                .set("n", args.n)
                .set("k", args.k)
                .set("x", args.x)
                .set("index", kind.tag())
                .rational("value", &v),
        );
    }
    emit(&table, args.format)
}

fn oracle_config(args: &OracleArgs) -> OracleConfig {
    OracleConfig {
        cap: args.cap,
        workers: args.workers,
    }
}

fn report_key(r: &VerificationReport) -> (IndexKind, usize, usize) {
    (r.index, r.n, r.k)
}

fn verify_row(r: &VerificationReport) -> Row {
    let certs = |c: &[tindex_core::Certificate]| {
        c.iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(";")
    };
    let row = Row::new()
        .set("n", r.n)
        .set("k", r.k)
        .set("index", r.index.tag())
        .set("oracle_value_num", r.oracle_value.num.clone())
        .set("oracle_value_den", r.oracle_value.den.clone())
        .set("oracle_value_decimal", r.oracle_value.decimal)
        .set("oracle_extremal", certs(&r.oracle_extremal))
        .set("predicted_value_num", r.predicted_value.num.clone())
        .set("predicted_value_den", r.predicted_value.den.clone())
        .set("predicted_value_decimal", r.predicted_value.decimal)
        .set("predicted_extremal", certs(&r.predicted_extremal))
        .set(
            "verdict",
            serde_json::to_value(r.verdict).unwrap_or_default(),
        );
    match r.timing_ms {
        Some(t) => row.set("timing_ms", t),
        None => row,
    }
}

fn read_reports(path: &Path) -> Result<Vec<VerificationReport>> {
    if !path.exists() {
        return Ok(Vec::new());
    }
    let file = fs::File::open(path)?;
    let mut out = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let r: VerificationReport = serde_json::from_str(&line).map_err(|e| {
            CliError::Usage(format!(
                "{}:{}: not a verification report: {e}",
                path.display(),
                i + 1
            ))
        })?;
        out.push(r);
    }
    Ok(out)
}

fn verify(args: VerifyArgs) -> Result<()> {
    let config = oracle_config(&args.oracle);
    for n in args.n.iter() {
        config.check(n)?;
    }
    let kinds = if args.all {
        IndexKind::ALL.to_vec()
    } else {
        args.index.kinds()
    };
    let previous = match &args.out {
        Some(path) => read_reports(path)?,
        None => Vec::new(),
    };
    let done: BTreeSet<_> = previous.iter().map(report_key).collect();
    let mut file = match &args.out {
        Some(path) => Some(OpenOptions::new().create(true).append(true).open(path)?),
        None => None,
    };
    let mut table = Table::new(&[]);
    let mut failed: Vec<String> = previous
        .iter()
        .filter(|r| kinds.contains(&r.index) && args.n.iter().any(|n| n == r.n) && !r.is_match())
        .map(|r| format!("{} n={} k={}", r.index, r.n, r.k))
        .collect();
    let stdout = io::stdout();
    for n in args.n.iter() {
        let cells: Vec<(IndexKind, usize)> = kinds
            .iter()
            .flat_map(|&kind| theorem_ks(n).into_iter().map(move |k| (kind, k)))
            .filter(|&(kind, k)| !done.contains(&(kind, n, k)))
            .collect();
        if cells.is_empty() {
            continue;
        }
        if n >= 9 {
            eprintln!("enumerating connected bipartite graphs on {n} vertices");
        }
        let catalog = Catalog::build(n, &config)?;
        if n >= 9 {
            eprintln!("{} graphs; verifying {} cells", catalog.len(), cells.len());
        }
        for (i, &(kind, k)) in cells.iter().enumerate() {
            let mut report = catalog.verify(kind, k)?;
            if !args.timing {
                report = report.without_timing();
            }
            if n >= 9 {
                eprintln!(
                    "[{}/{}] {kind} n={n} k={k}: {:?}",
                    i + 1,
                    cells.len(),
                    report.verdict
                );
            }
            if !report.is_match() {
                failed.push(format!("{kind} n={n} k={k}"));
            }
            let line =
                serde_json::to_string(&report).map_err(|e| CliError::Usage(e.to_string()))?;
            if let Some(f) = file.as_mut() {
                writeln!(f, "{line}")?;
            }
            match args.format {
                Format::Json => {
                    let mut out = stdout.lock();
                    writeln!(out, "{line}")?;
                }
                _ => table.push(verify_row(&report)),
            }
        }
    }
    if args.format != Format::Json {
        emit(&table, args.format)?;
    }
    if args.strict && !failed.is_empty() {
        return Err(CliError::Mismatch(format!(
            "verdict mismatch in {}",
            failed.join(", ")
        )));
    }
    Ok(())
}

fn enumerate(args: EnumerateArgs) -> Result<()> {
    let config = oracle_config(&args.oracle);
    config.check(args.n)?;
    if args.n >= 9 {
        eprintln!(
            "enumerating connected bipartite graphs on {} vertices",
            args.n
        );
    }
    let catalog = Catalog::build(args.n, &config)?;
    let entries: Vec<_> = match args.k {
        Some(k) => catalog.with_cut_edges(k).collect(),
        None => catalog.entries.iter().collect(),
    };
    if args.format == Format::Graph6 {
        let stdout = io::stdout();
        let mut out = stdout.lock();
        for e in entries {
            writeln!(out, "{}", e.certificate)?;
        }
        return Ok(());
    }
    let mut table = Table::new(&["graph6", "n", "m", "bridges"]);
    for e in entries {
        table.push(
            Row::new()
                .set("graph6", e.certificate.to_string())
                .set("n", e.graph.n())
                .set("m", e.graph.m())
                .set("bridges", e.bridges),
        );
    }
    emit(&table, args.format)
}

fn parse_graph(text: &str) -> Result<Graph> {
    graph6::decode(text).map_err(|e| CliError::Usage(format!("--graph: {e}")))
}

fn expectation_text(e: &Expectation) -> String {
    match e {
        Expectation::Decrease => "decrease".into(),
        Expectation::Increase => "increase".into(),
        Expectation::NonDecrease => "non-decrease".into(),
        Expectation::Exactly(v) => format!("delta = {v}"),
    }
}

const CLAIM_COLUMNS: [&str; 10] = [
    "transform",
    "before",
    "after",
    "index",
    "expected",
    "delta_num",
    "delta_den",
    "delta_decimal",
    "holds",
    "error",
];

fn claim_rows(table: &mut Table, report: &TransformReport) {
    let before = graph6::encode(&report.before);
    let after = graph6::encode(&report.after);
    for c in &report.claims {
        table.push(
            Row::new()
                .set("transform", report.transform)
                .set("before", before.clone())
                .set("after", after.clone())
                .set("index", c.index.tag())
                .set("expected", expectation_text(&c.expected))
                .rational("delta", &c.delta)
                .set("holds", c.holds)
                .set("error", ""),
        );
    }
}

fn hypothesis_row(transform: &str, before: &Graph, error: String) -> Row {
    Row::new()
        .set("transform", transform)
        .set("before", graph6::encode(before))
        .set("after", "")
        .set("index", "")
        .set("expected", "")
        .blank_rational("delta")
        .set("holds", "")
        .set("error", error)
}

fn parse_core(args: &CoreArgs) -> Result<(DecoratedCore, CoreVertex, CoreVertex)> {
    let mut core = DecoratedCore::new(args.s, args.t)?;
    for item in args
        .pendants
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
    {
        let (v, count) = item.split_once(':').ok_or_else(|| {
            CliError::Usage(format!("--pendants item `{item}` is not vertex:count"))
        })?;
        let v: CoreVertex = v
            .parse()
            .map_err(|e: Error| CliError::Usage(e.to_string()))?;
        let count: usize = count
            .parse()
            .map_err(|_| CliError::Usage(format!("--pendants count `{count}` is not a number")))?;
        core = core.with(v, count)?;
    }
    let from: CoreVertex = args
        .from
        .parse()
        .map_err(|e: Error| CliError::Usage(e.to_string()))?;
    let to: CoreVertex = args
        .to
        .parse()
        .map_err(|e: Error| CliError::Usage(e.to_string()))?;
    Ok((core, from, to))
}

fn probe(args: ProbeArgs) -> Result<()> {
    let mut all_hold = true;
    let table = match args.lemma {
        ProbeKind::Lemma2 {
            graph,
            samples,
            seed,
        } => {
            let g = parse_graph(&graph)?;
            let report = monotonicity_probe(&g, samples.unwrap_or(usize::MAX), seed)?;
            let mut table = Table::new(&[]);
            for (slot, kind) in IndexKind::ALL.into_iter().enumerate() {
                let expected = Expectation::improving(kind);
                let holds = report.violations[slot] == 0;
                all_hold &= holds;
                table.push(
                    Row::new()
                        .set("transform", "lemma2")
                        .set("graph", graph6::encode(&g))
                        .set("index", kind.tag())
                        .set("expected", expectation_text(&expected))
                        .set("absent_edges", report.absent_edges)
                        .set("probed", report.probed)
                        .set("violations", report.violations[slot])
                        .set("holds", holds),
                );
            }
            table
        }
        ProbeKind::Lemma3 { graph, u, w } => {
            let g = parse_graph(&graph)?;
            let mut table = Table::new(&CLAIM_COLUMNS);
            let bridges: Vec<(usize, usize)> = match (u, w) {
                (Some(u), Some(w)) => vec![(u, w)],
                _ => g.bridges(),
            };
            let explicit = u.is_some();
            for (a, b) in bridges {
                let result =
                    CutEdgeContext::new(g.clone(), a, b).and_then(|ctx| check_lemma3(&ctx));
                match result {
                    Ok(report) => {
                        all_hold &= report.all_hold();
                        claim_rows(&mut table, &report);
                    }
                    Err(e @ (Error::Hypothesis(_) | Error::Disconnected))
                    | Err(e @ Error::VertexOutOfRange { .. })
                        if !explicit =>
                    {
                        table.push(hypothesis_row("lemma3", &g, format!("bridge {a}-{b}: {e}")));
                    }
                    Err(e) => return Err(e.into()),
                }
            }
            table
        }
        ProbeKind::Lemma4(core_args) => {
            let (core, from, to) = parse_core(&core_args)?;
            let report = check_lemma4(&core, from, to)?;
            all_hold &= report.all_hold();
            let mut table = Table::new(&CLAIM_COLUMNS);
            claim_rows(&mut table, &report);
            table
        }
        ProbeKind::Lemma5(core_args) => {
            let (core, from, to) = parse_core(&core_args)?;
            let report = check_lemma5(&core, to, from)?;
            all_hold &= report.all_hold();
            let mut table = Table::new(&CLAIM_COLUMNS);
            claim_rows(&mut table, &report);
            table
        }
    };
    emit(&table, args.format)?;
    if args.strict && !all_hold {
        return Err(CliError::Mismatch("some claims do not hold".into()));
    }
    Ok(())
}

use std::fmt::Write as _;
use std::hint::black_box;
use std::time::Instant;

use rayon::prelude::*;
use syncode::bench::{self, Family};
use syncode::oracle::{self, OracleVerdict, DEFAULT_GUARD};
use syncode::sim::Channel;
use syncode::unified::{run_deletion_flowchart, run_reversal_flowchart};
use syncode::{azinv, monotone, reference};
use syncode::{CodeParams, DecodeOutcome, Decoded, ErrorClass, Word};

use crate::codespec::{CodeSpec, FamilyName};
use crate::grid::GridPoint;
use crate::UsageError;

fn parse_word(text: &str) -> Result<Word, UsageError> {
    Ok(text.trim().parse::<Word>()?)
}

fn deletion_class(family: FamilyName) -> ErrorClass {
    match family {
        FamilyName::Monotone => ErrorClass::Del,
        FamilyName::Azinv => ErrorClass::Bad,
    }
}

fn answer(out: &DecodeOutcome) -> String {
    match &out.result {
        Decoded::Codeword(x) => x.to_string(),
        Decoded::Failure(reason) => format!("? {reason}"),
    }
}

/// Lists the codebook in lexicographic order followed by `# count=N`.
pub fn cmd_enumerate(spec: &CodeSpec) -> Result<String, UsageError> {
    let book = oracle::enumerate(&spec.params()?)?;
    let mut out = String::new();
    for x in book.words() {
        writeln!(out, "{x}").unwrap();
    }
    writeln!(out, "# count={}", book.len()).unwrap();
    Ok(out)
}

/// Decodes one received word. With `trace`, adds the decoder's internal
/// values, an echo of the run, and a `# time_ns=` line.
pub fn cmd_decode(spec: &CodeSpec, y: &str, trace: bool) -> Result<String, UsageError> {
    let params = spec.params()?;
    let y = parse_word(y)?;
    let start = Instant::now();
    let out = black_box(params.decode(black_box(&y)));
    let elapsed = start.elapsed().as_nanos();

    let mut text = answer(&out);
    text.push('\n');
    if trace {
        let fields = out.trace.to_string();
        writeln!(text, "{}", if fields.is_empty() { "-" } else { &fields }).unwrap();
        writeln!(text, "# decode {y} on {spec} branch={:?}", out.trace.branch).unwrap();
        writeln!(text, "# time_ns={elapsed}").unwrap();
    }
    Ok(text)
}

/// Applies one error to a codeword, at `pos` or at a seeded uniform position.
pub fn cmd_corrupt(
    spec: &CodeSpec,
    x: &str,
    class: Option<ErrorClass>,
    pos: Option<usize>,
    seed: u64,
) -> Result<String, UsageError> {
    let params = spec.params()?;
    let x = parse_word(x)?;
    if !params.is_codeword(&x) {
        return Err(UsageError(format!("{x} is not a codeword of {spec}")));
    }
    let class = class.unwrap_or(deletion_class(spec.family));
    if !params.native_classes().contains(&class) {
        return Err(UsageError(format!("class {class} does not apply to {} codes", spec.family)));
    }
    Ok(match pos {
        Some(i) => format!("{} (pos={i})\n", class.apply(&x, i)?),
        None => {
            let (y, i) = Channel::new(seed)
                .corrupt(&x, class)
                .ok_or_else(|| UsageError(format!("no valid {class} position in {x}")))?;
            format!("{y} (pos={i}, seed={seed})\n")
        }
    })
}

/// Times decoding across `ns` and emits CSV rows plus a `#slope=` footer.
pub fn cmd_bench(
    family: FamilyName,
    ns: &[usize],
    class: Option<ErrorClass>,
    reps: usize,
    seed: u64,
) -> Result<String, UsageError> {
    let class = class.unwrap_or(deletion_class(family));
    let points = bench::measure(Family::from(family), ns, class, reps, seed)?;
    let mut out = format!("# seed={seed} reps={reps}\nfamily,n,error_class,median_ns,ns_per_symbol\n");
    for p in &points {
        writeln!(out, "{family},{},{},{},{:.3}", p.n, p.error_class, p.median_ns, p.ns_per_symbol).unwrap();
    }
    if let Some(slope) = bench::loglog_slope(&points) {
        writeln!(out, "#slope={slope:.4}").unwrap();
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub text: String,
    pub passed: bool,
}

#[derive(Debug, Default)]
struct PointResult {
    codewords: usize,
    round_trips: usize,
    images: usize,
    compared: usize,
    failures: Vec<String>,
}

fn all_words(n: usize) -> impl Iterator<Item = Word> {
    (0..1u64 << n).map(move |v| Word::from_index(v, n))
}

fn engine_decode(params: &CodeParams, y: &Word) -> DecodeOutcome {
    macro_rules! dispatch {
        ($binding:expr) => {{
            let (del, rev) = $binding;
            if y.len() == params.n() {
                run_reversal_flowchart(y, &rev)
            } else {
                run_deletion_flowchart(y, &del)
            }
        }};
    }
    match params {
        CodeParams::Monotone(p) => dispatch!(monotone::binding(p)),
        CodeParams::Azinv(p) => dispatch!(azinv::binding(p)),
    }
}

fn reference_decode(params: &CodeParams, y: &Word) -> DecodeOutcome {
    match params {
        CodeParams::Monotone(p) => reference::decode_monotone(y, p),
        CodeParams::Azinv(p) => reference::decode_azinv(y, p),
    }
}

fn verify_point(point: &GridPoint) -> PointResult {
    let mut res = PointResult::default();
    let spec = &point.spec;
    let repro = |y: &Word| format!("syncode {} decode {y} --trace", spec.flags());
    let params = match spec.params() {
        Ok(p) => p,
        Err(e) => {
            res.failures.push(e.0);
            return res;
        }
    };
    let book = match oracle::enumerate_with_guard(&params, DEFAULT_GUARD) {
        Ok(book) => book,
        Err(e) => {
            res.failures.push(e.to_string());
            return res;
        }
    };
    res.codewords = book.len();

    for x in book.words() {
        let out = params.decode(x);
        if out.codeword() != Some(x) {
            res.failures.push(format!("codeword {x} decodes to {}; repro: {}", answer(&out), repro(x)));
        }
        for &class in &point.classes {
            for i in class.valid_positions(x) {
                let y = class.apply(x, i).expect("valid position");
                let out = params.decode(&y);
                res.round_trips += 1;
                if out.codeword() != Some(x) {
                    res.failures.push(format!(
                        "{class} at {i} turns {x} into {y}, decoded {}; repro: {}",
                        answer(&out),
                        repro(&y)
                    ));
                }
            }
        }
    }

    for &class in &point.classes {
        let report = book.certify(class);
        if let Some(w) = &report.witness {
            res.failures.push(format!(
                "{class} balls of {} and {} meet at {}; repro: {}",
                w.first,
                w.second,
                w.image,
                repro(&w.image)
            ));
        }
        let index = book.ball_index(class);
        for y in index.images() {
            res.images += 1;
            if let OracleVerdict::Unique(x) = index.verdict(y) {
                let out = params.decode(y);
                if out.codeword() != Some(&x) {
                    res.failures.push(format!(
                        "oracle gives {x} for {class} image {y}, decoder gives {}; repro: {}",
                        answer(&out),
                        repro(y)
                    ));
                }
            }
        }
    }

    let n = params.n();
    let mut lengths = vec![n + 1, n];
    lengths.extend((1..=3).filter_map(|d| n.checked_sub(d)));
    for len in lengths {
        for y in all_words(len) {
            let direct = params.decode(&y);
            let engine = engine_decode(&params, &y);
            let literal = reference_decode(&params, &y);
            res.compared += 1;
            if engine != direct || literal != direct {
                res.failures.push(format!(
                    "decoders disagree on {y}: direct {} [{}], engine {} [{}], reference {} [{}]; repro: {}",
                    answer(&direct),
                    direct.trace,
                    answer(&engine),
                    engine.trace,
                    answer(&literal),
                    literal.trace,
                    repro(&y)
                ));
            }
        }
    }
    res
}

/// Runs every check at every grid point. Points are checked in parallel and
/// reported in grid order.
pub fn cmd_verify(points: &[GridPoint]) -> VerifyReport {
    let results: Vec<PointResult> = points.par_iter().map(verify_point).collect();
    let mut text = String::new();
    let mut failed = 0;
    for (point, res) in points.iter().zip(&results) {
        let status = if res.failures.is_empty() { "PASS" } else { "FAIL" };
        writeln!(
            text,
            "{status} line {}: {}: {} codewords, {} round trips, {} oracle images, {} words compared",
            point.line,
            point.to_line(),
            res.codewords,
            res.round_trips,
            res.images,
            res.compared
        )
        .unwrap();
        for f in &res.failures {
            writeln!(text, "  {f}").unwrap();
        }
        failed += usize::from(!res.failures.is_empty());
    }
    let passed = failed == 0;
    if passed {
        writeln!(text, "ALL PASS ({} grid points)", points.len()).unwrap();
    } else {
        writeln!(text, "FAILED {failed} of {} grid points", points.len()).unwrap();
    }
    VerifyReport { text, passed }
}

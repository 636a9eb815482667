//! Batch sweeps over s-sequences: δ by ascents and by the oracle, the full
//! classification, and a brute-force IDP check per sequence, persisted as one
//! JSON object per line.
//!
//! Records are appended chunk by chunk as they are computed, so an
//! interrupted sweep can be resumed. On completion the file is rewritten in
//! lexicographic order of `s`.

use std::collections::{BTreeMap, BTreeSet};
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::budget::Budget;
use crate::classify;
use crate::delta::{self, DeltaVector};
use crate::error::{Error, Result};
use crate::hall::SSequence;
use crate::idp;
use crate::oracle;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

const CHUNK: usize = 64;

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub dmin: usize,
    pub dmax: usize,
    pub smax: i64,
    /// `Some((n, seed))`: `n` distinct random sequences instead of the
    /// exhaustive sweep.
    pub random: Option<(usize, u64)>,
    pub k_max: Option<usize>,
    pub budget: Budget,
    pub resume: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RecordError {
    pub kind: String,
    pub message: String,
}

/// One line of the store. `classification` is kept as JSON so old files
/// stay readable as the schema grows.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchRecord {
    pub s: SSequence,
    pub delta: Option<DeltaVector>,
    pub oracle_agrees: Option<bool>,
    pub classification: Option<Value>,
    pub idp_verdict: Option<bool>,
    pub k_checked: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<RecordError>,
    pub timestamp: u64,
    pub version: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SearchSummary {
    pub records: usize,
    pub new_records: usize,
    pub witnesses: usize,
    pub errors: usize,
}

fn now() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

/// Evaluates one sequence. Budget overruns become `error`; oracle or theorem
/// disagreements and IDP failures become `witness`.
pub fn evaluate(s: &SSequence, k_max: Option<usize>, budget: &Budget) -> SearchRecord {
    let mut rec = SearchRecord {
        s: s.clone(),
        delta: None,
        oracle_agrees: None,
        classification: None,
        idp_verdict: None,
        k_checked: None,
        witness: None,
        error: None,
        timestamp: now(),
        version: VERSION.to_string(),
    };
    if let Err(e) = fill(&mut rec, k_max, budget) {
        match e {
            Error::Inconsistency(msg) => {
                rec.witness = Some(json!({"kind": "theorem-disagreement", "message": msg}));
            }
            other => {
                rec.error = Some(RecordError {
                    kind: other.kind().to_string(),
                    message: other.to_string(),
                });
            }
        }
    }
    rec
}

fn fill(rec: &mut SearchRecord, k_max: Option<usize>, budget: &Budget) -> Result<()> {
    let s = rec.s.clone();
    let delta = delta::delta_vector_within(&s, budget)?;
    rec.delta = Some(delta.clone());
    let oracle = oracle::oracle_delta(&s, budget)?;
    rec.oracle_agrees = Some(oracle == delta);
    if oracle != delta {
        rec.witness = Some(json!({"kind": "oracle-disagreement", "oracle_delta": oracle}));
        return Ok(());
    }
    let c = classify::classify_with(&s, &delta, budget)?;
    rec.classification = Some(serde_json::to_value(&c).map_err(|e| Error::Parse(e.to_string()))?);
    let report = idp::is_idp(&s, k_max, budget)?;
    rec.idp_verdict = Some(report.verdict);
    rec.k_checked = Some(report.k_checked);
    if let Some(w) = report.witness {
        rec.witness = Some(json!({"kind": "idp-failure", "k": w.k, "point": w.point}));
    }
    Ok(())
}

/// All `s` with `dmin <= d <= dmax` and `1 <= s_i <= smax`, lexicographic.
pub fn exhaustive_sequences(dmin: usize, dmax: usize, smax: i64) -> Vec<SSequence> {
    let mut out = Vec::new();
    for d in dmin.max(1)..=dmax {
        let mut s = vec![1i64; d];
        loop {
            out.push(SSequence::new(s.clone()).expect("positive entries"));
            let mut i = d;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                s[i] += 1;
                if s[i] <= smax {
                    break;
                }
                s[i] = 1;
            }
            if s.iter().all(|&x| x == 1) {
                break;
            }
        }
    }
    out.sort();
    out
}

/// `n` distinct sequences, dimension and entries uniform in range. Returns
/// fewer when the range has fewer than `n` members.
pub fn random_sequences(n: usize, dmin: usize, dmax: usize, smax: i64, seed: u64) -> Vec<SSequence> {
    let dmin = dmin.max(1);
    let total: u128 = (dmin..=dmax)
        .map(|d| (smax.max(0) as u128).saturating_pow(d as u32))
        .fold(0, u128::saturating_add);
    let n = (n as u128).min(total) as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let d = rng.gen_range(dmin..=dmax);
        let s: Vec<i64> = (0..d).map(|_| rng.gen_range(1..=smax)).collect();
        if seen.insert(s.clone()) {
            out.push(SSequence::new(s).expect("positive entries"));
        }
    }
    out
}

fn io_error(path: &Path, e: std::io::Error) -> Error {
    Error::Io(format!("{}: {e}", path.display()))
}

/// Records already in the store; unparsable lines (a write cut short by an
/// interruption) are dropped.
pub fn read_records(path: &Path) -> Result<Vec<SearchRecord>> {
    if !path.exists() {
        return Ok(Vec::new());
    }
    let file = File::open(path).map_err(|e| io_error(path, e))?;
    let mut out = Vec::new();
    for line in BufReader::new(file).lines() {
        let line = line.map_err(|e| io_error(path, e))?;
        if let Ok(rec) = serde_json::from_str::<SearchRecord>(&line) {
            out.push(rec);
        }
    }
    Ok(out)
}

/// Empty files count as terminated.
fn ends_with_newline(path: &Path) -> Result<bool> {
    let bytes = fs::read(path).map_err(|e| io_error(path, e))?;
    Ok(bytes.last().is_none_or(|&b| b == b'\n'))
}

fn to_line(rec: &SearchRecord) -> Result<String> {
    serde_json::to_string(rec).map_err(|e| Error::Parse(e.to_string()))
}

/// Dedupes by `s` (first record wins) and rewrites the store sorted.
fn canonicalize(path: &Path) -> Result<Vec<SearchRecord>> {
    let mut by_s = BTreeMap::new();
    for rec in read_records(path)? {
        by_s.entry(rec.s.as_slice().to_vec()).or_insert(rec);
    }
    let tmp = path.with_extension("jsonl.tmp");
    {
        let file = File::create(&tmp).map_err(|e| io_error(&tmp, e))?;
        let mut w = BufWriter::new(file);
        for rec in by_s.values() {
            writeln!(w, "{}", to_line(rec)?).map_err(|e| io_error(&tmp, e))?;
        }
        w.flush().map_err(|e| io_error(&tmp, e))?;
    }
    fs::rename(&tmp, path).map_err(|e| io_error(path, e))?;
    Ok(by_s.into_values().collect())
}

/// Runs the sweep into `out`. Without `resume` an existing store is
/// replaced.
pub fn run_search(config: &SearchConfig, out: &Path) -> Result<SearchSummary> {
    if config.dmax < config.dmin.max(1) || config.smax < 1 {
        return Err(Error::Precondition(format!(
            "empty range: d in {}..={}, s_i in 1..={}",
            config.dmin, config.dmax, config.smax
        )));
    }
    let done: BTreeSet<Vec<i64>> = if config.resume {
        read_records(out)?
            .into_iter()
            .map(|r| r.s.as_slice().to_vec())
            .collect()
    } else {
        BTreeSet::new()
    };
    let todo: Vec<SSequence> = match config.random {
        Some((n, seed)) => random_sequences(n, config.dmin, config.dmax, config.smax, seed),
        None => exhaustive_sequences(config.dmin, config.dmax, config.smax),
    }
    .into_iter()
    .filter(|s| !done.contains(s.as_slice()))
    .collect();

    let file = OpenOptions::new()
        .create(true)
        .write(true)
        .append(config.resume)
        .truncate(!config.resume)
        .open(out)
        .map_err(|e| io_error(out, e))?;
    let mut w = BufWriter::new(file);
    if config.resume && !ends_with_newline(out)? {
        writeln!(w).map_err(|e| io_error(out, e))?;
    }
    for chunk in todo.chunks(CHUNK) {
        let lines = chunk
            .par_iter()
            .map(|s| to_line(&evaluate(s, config.k_max, &config.budget)))
            .collect::<Result<Vec<_>>>()?;
        for line in lines {
            writeln!(w, "{line}").map_err(|e| io_error(out, e))?;
        }
        w.flush().map_err(|e| io_error(out, e))?;
    }
    drop(w);

    let records = canonicalize(out)?;
    Ok(SearchSummary {
        records: records.len(),
        new_records: todo.len(),
        witnesses: records.iter().filter(|r| r.witness.is_some()).count(),
        errors: records.iter().filter(|r| r.error.is_some()).count(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[i64]) -> SSequence {
        SSequence::new(v.to_vec()).unwrap()
    }

    fn config(dmax: usize, smax: i64) -> SearchConfig {
        SearchConfig {
            dmin: 1,
            dmax,
            smax,
            random: None,
            k_max: None,
            budget: Budget::default(),
            resume: false,
        }
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(exhaustive_sequences(1, 3, 3).len(), 39);
        assert_eq!(exhaustive_sequences(4, 4, 4).len(), 256);
        let r = random_sequences(50, 1, 4, 6, 7);
        assert_eq!(r.len(), 50);
        assert_eq!(r, random_sequences(50, 1, 4, 6, 7));
        assert_eq!(random_sequences(100, 1, 1, 3, 0).len(), 3);
    }

    #[test]
    fn record_contents() {
        let rec = evaluate(&seq(&[2, 3]), None, &Budget::default());
        assert_eq!(rec.delta, Some(DeltaVector(vec![1, 4, 1])));
        assert_eq!(rec.oracle_agrees, Some(true));
        assert_eq!(rec.idp_verdict, Some(true));
        assert!(rec.witness.is_none() && rec.error.is_none());
        let over = evaluate(&seq(&[9, 9, 9]), None, &Budget::new(10));
        assert_eq!(over.error.unwrap().kind, "budget-exceeded");
    }

    #[test]
    fn sweep_and_resume() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("r.jsonl");
        let summary = run_search(&config(3, 3), &out).unwrap();
        assert_eq!((summary.records, summary.witnesses, summary.errors), (39, 0, 0));
        let first = fs::read_to_string(&out).unwrap();

        let mut resume = config(3, 3);
        resume.resume = true;
        let again = run_search(&resume, &out).unwrap();
        assert_eq!((again.records, again.new_records), (39, 0));
        assert_eq!(fs::read_to_string(&out).unwrap(), first);

        // cut the store short, including a torn last line
        let kept: Vec<&str> = first.lines().take(10).collect();
        fs::write(&out, format!("{}\n{{\"s\":[3,", kept.join("\n"))).unwrap();
        let resumed = run_search(&resume, &out).unwrap();
        assert_eq!((resumed.records, resumed.new_records), (39, 29));
        let strip = |text: &str| -> Vec<Value> {
            text.lines()
                .map(|l| {
                    let mut v: Value = serde_json::from_str(l).unwrap();
                    v.as_object_mut().unwrap().remove("timestamp");
                    v
                })
                .collect()
        };
        assert_eq!(strip(&fs::read_to_string(&out).unwrap()), strip(&first));
    }
}

//! Batch driver: expands a [`TaskSpec`] into independent work items, runs
//! them on a rayon pool, and assembles a deterministic [`RunReport`].
//!
//! Determinism: results are sorted by `(statement_id, params)` after the
//! parallel fan-out, so two runs of the same task with different `--jobs`
//! produce byte-identical JSON apart from the timing fields.
//!
//! Caching: an append-only JSON-lines file keyed by `(statement_id, params)`.
//! Items recorded as passes are skipped on rerun unless forced; a corrupt
//! cache file is reported as a warning and everything is recomputed.

use std::collections::{BTreeMap, HashMap};
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::congruences::{
    check_conj41, check_conj42, check_observation, check_problem36, check_th31,
    check_th31_corollary, check_th32, check_th32_parametric, check_th33, check_th34, check_th35,
    check_th414, residue_report, CongruenceReport, ObservationReading, Status,
};
use crate::error::QcError;
use crate::identities::{
    verify_product_identity, verify_q_clausen, verify_q_gauss_specialization, verify_terminating,
    verify_terminating_reversed, SignedMonomial, PRODUCT_IDS, TERMINATING_IDS,
};
use crate::modforms::{closed_form_a, dirichlet_l_chi4, form_coeffs, l_value, Form};
use crate::qseries::preset;
use crate::supercong::{
    check_a2_style, check_b2, check_cong2, check_gamma, numeric_bauer, numeric_h1, numeric_h2,
};

/// What family of statement a task verifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TaskKind {
    Theorem,
    Conjecture,
    Problem,
    Identity,
    Modform,
    Supercong,
    Numeric,
    Scan,
}

/// A complete description of one batch run.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TaskSpec {
    pub kind: TaskKind,
    pub id: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_range: Option<(u64, u64)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p_range: Option<(u64, u64)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r_max: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub series: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub power: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub limit: Option<usize>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub check_closed_form: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l_value_s: Option<u32>,
}

impl TaskSpec {
    pub fn new(kind: TaskKind, id: &str) -> Self {
        TaskSpec {
            kind,
            id: id.to_string(),
            n_range: None,
            p_range: None,
            r_max: None,
            order: None,
            params: BTreeMap::new(),
            series: None,
            power: None,
            limit: None,
            check_closed_form: false,
            l_value_s: None,
        }
    }
}

/// Pass/fail/undefined tallies (skipped items count as passed: nothing to
/// verify is not a failure).
#[derive(Clone, Copy, Debug, Default, Serialize, Deserialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub undefined: usize,
}

/// The assembled outcome of one task.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub task: TaskSpec,
    pub results: Vec<CongruenceReport>,
    /// Present only for coefficient-listing tasks; `(n, a(n))` pairs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<Vec<(u64, String)>>,
    pub summary: Summary,
    #[serde(serialize_with = "ser_millis", rename = "wall_time_ms")]
    pub wall_time: Duration,
}

fn ser_millis<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_millis() as u64)
}

impl RunReport {
    /// Exit-code contract: success iff nothing failed and nothing was
    /// undefined.
    pub fn all_ok(&self) -> bool {
        self.summary.failed == 0 && self.summary.undefined == 0
    }
}

fn summarize(results: &[CongruenceReport]) -> Summary {
    let mut s = Summary::default();
    for r in results {
        match r.status {
            Status::Pass | Status::Skipped => s.passed += 1,
            Status::Fail => s.failed += 1,
            Status::Undefined => s.undefined += 1,
        }
    }
    s
}

fn report_from_bool(
    id: &str,
    params: BTreeMap<String, i64>,
    ok: bool,
    witness_on_fail: &str,
    start: Instant,
) -> CongruenceReport {
    CongruenceReport {
        statement_id: id.to_string(),
        params,
        status: if ok { Status::Pass } else { Status::Fail },
        witness: if ok { None } else { Some(witness_on_fail.to_string()) },
        elapsed: start.elapsed(),
    }
}

fn odd_in(range: (u64, u64)) -> impl Iterator<Item = u64> {
    (range.0.max(3)..=range.1).filter(|n| n % 2 == 1)
}

fn primes_in(range: (u64, u64)) -> impl Iterator<Item = u64> {
    (range.0.max(3)..=range.1).filter(|p| p % 2 == 1 && (3..*p).step_by(2).all(|d| p % d != 0))
}

type CheckFn = Box<dyn Fn() -> Result<CongruenceReport, QcError> + Send + Sync>;

/// One independent check with its cache key known in advance.
struct WorkItem {
    statement_id: String,
    params: BTreeMap<String, i64>,
    check: CheckFn,
}

fn params1(key: &str, v: i64) -> BTreeMap<String, i64> {
    BTreeMap::from([(key.to_string(), v)])
}

fn push_n<F>(
    items: &mut Vec<WorkItem>,
    id: &str,
    ns: impl Iterator<Item = u64>,
    extra: &[(&str, i64)],
    f: F,
) where
    F: Fn(u64) -> Result<CongruenceReport, QcError> + Send + Sync + Clone + 'static,
{
    for n in ns {
        let f = f.clone();
        let mut params = params1("n", n as i64);
        for (k, v) in extra {
            params.insert(k.to_string(), *v);
        }
        items.push(WorkItem {
            statement_id: id.to_string(),
            params,
            check: Box::new(move || f(n)),
        });
    }
}

fn need_range(opt: Option<(u64, u64)>, flag: &str) -> Result<(u64, u64), QcError> {
    opt.ok_or_else(|| QcError::Parse(format!("this task requires {flag}")))
}

/// Expand a task into independent checks.
fn work_items(task: &TaskSpec) -> Result<Vec<WorkItem>, QcError> {
    let mut items: Vec<WorkItem> = Vec::new();
    match task.kind {
        TaskKind::Theorem => {
            let range = need_range(task.n_range, "--n-range")?;
            match task.id.as_str() {
                "3.1" => {
                    push_n(&mut items, "thm31", odd_in(range), &[], check_th31);
                    push_n(
                        &mut items,
                        "thm31_corollary",
                        odd_in(range),
                        &[],
                        check_th31_corollary,
                    );
                }
                "3.2" => push_n(&mut items, "thm32", odd_in(range), &[], check_th32),
                "3.2a" => push_n(
                    &mut items,
                    "thm32_parametric",
                    odd_in(range),
                    &[],
                    check_th32_parametric,
                ),
                "3.3" => push_n(&mut items, "thm33", odd_in(range), &[], check_th33),
                "3.4" => push_n(&mut items, "thm34", odd_in(range), &[], check_th34),
                "3.5" => push_n(
                    &mut items,
                    "thm35",
                    odd_in(range).filter(|n| n % 4 == 1),
                    &[],
                    check_th35,
                ),
                "4.14" => push_n(
                    &mut items,
                    "thm414",
                    odd_in(range).filter(|n| n % 4 == 3),
                    &[],
                    check_th414,
                ),
                "obs" => push_n(&mut items, "observation", odd_in(range), &[("reading", 0)], |n| {
                    check_observation(n, ObservationReading::Divisors)
                }),
                other => return Err(QcError::Parse(format!("unknown theorem id '{other}'"))),
            }
        }
        TaskKind::Conjecture => {
            let range = need_range(task.n_range, "--n-range")?;
            let r_max = task.r_max.unwrap_or(1);
            let (sid, f): (&str, fn(u64, u64) -> Result<CongruenceReport, QcError>) =
                match task.id.as_str() {
                    "4.1" => ("conj41", check_conj41),
                    "4.2" => ("conj42", check_conj42),
                    other => {
                        return Err(QcError::Parse(format!("unknown conjecture id '{other}'")))
                    }
                };
            for n in odd_in(range).filter(|n| n % 4 == 3) {
                for r in 1..=r_max {
                    let mut params = params1("n", n as i64);
                    params.insert("r".to_string(), r as i64);
                    items.push(WorkItem {
                        statement_id: sid.to_string(),
                        params,
                        check: Box::new(move || f(n, r)),
                    });
                }
            }
        }
        TaskKind::Problem => {
            if task.id != "3.6" {
                return Err(QcError::Parse(format!("unknown problem id '{}'", task.id)));
            }
            let range = need_range(task.n_range, "--n-range")?;
            push_n(
                &mut items,
                "prob36",
                odd_in(range).filter(|n| n % 8 == 7),
                &[],
                check_problem36,
            );
        }
        TaskKind::Identity => {
            let id = task.id.clone();
            let order = task.order.unwrap_or(100);
            let params = task.params.clone();
            if TERMINATING_IDS.contains(&id.as_str()) {
                let (id2, params2) = (id.clone(), params.clone());
                items.push(WorkItem {
                    statement_id: id.clone(),
                    params: params.clone(),
                    check: Box::new(move || {
                        let start = Instant::now();
                        let ok = verify_terminating(&id2, &params2)?;
                        Ok(report_from_bool(&id2, params2.clone(), ok, "sides differ", start))
                    }),
                });
                let rid = format!("{id}_reversed");
                let (rid2, params2) = (rid.clone(), params.clone());
                items.push(WorkItem {
                    statement_id: rid,
                    params: params.clone(),
                    check: Box::new(move || {
                        let start = Instant::now();
                        let ok = verify_terminating_reversed(&id, &params2)?;
                        Ok(report_from_bool(&rid2, params2.clone(), ok, "sides differ", start))
                    }),
                });
            } else if PRODUCT_IDS.contains(&id.as_str()) {
                let mut p = params.clone();
                p.insert("order".to_string(), order as i64);
                let p2 = p.clone();
                items.push(WorkItem {
                    statement_id: id.clone(),
                    params: p,
                    check: Box::new(move || {
                        let start = Instant::now();
                        let ok = verify_product_identity(&id, order)?;
                        Ok(report_from_bool(&id, p2.clone(), ok, "series heads differ", start))
                    }),
                });
            } else if id == "q_clausen" {
                let mut p = params.clone();
                p.insert("order".to_string(), order as i64);
                let p2 = p.clone();
                items.push(WorkItem {
                    statement_id: id,
                    params: p,
                    check: Box::new(move || {
                        let start = Instant::now();
                        let alpha = *p2.get("alpha").unwrap_or(&0);
                        let sign = *p2.get("z_sign").unwrap_or(&1) as i8;
                        let exp = *p2.get("z_exp").unwrap_or(&4);
                        let ok = verify_q_clausen(alpha, SignedMonomial { sign, exp }, order)?;
                        Ok(report_from_bool(
                            "q_clausen",
                            p2.clone(),
                            ok,
                            "series heads differ",
                            start,
                        ))
                    }),
                });
            } else if id == "q_gauss" {
                let p = params1("order", order as i64);
                let p2 = p.clone();
                items.push(WorkItem {
                    statement_id: id,
                    params: p,
                    check: Box::new(move || {
                        let start = Instant::now();
                        let ok = verify_q_gauss_specialization(order)?;
                        Ok(report_from_bool("q_gauss", p2.clone(), ok, "series heads differ", start))
                    }),
                });
            } else {
                return Err(QcError::Parse(format!("unknown identity id '{id}'")));
            }
        }
        TaskKind::Supercong => {
            let range = need_range(task.p_range, "--p-range")?;
            let f: fn(u64) -> Result<CongruenceReport, QcError> = match task.id.as_str() {
                "B2" => check_b2,
                "A2" => check_a2_style,
                "cong2" => check_cong2,
                "gamma" => check_gamma,
                other => return Err(QcError::Parse(format!("unknown supercong id '{other}'"))),
            };
            for p in primes_in(range) {
                items.push(WorkItem {
                    statement_id: task.id.clone(),
                    params: params1("p", p as i64),
                    check: Box::new(move || f(p)),
                });
            }
        }
        TaskKind::Scan => {
            let range = need_range(task.n_range, "--n-range")?;
            let series = task.series.clone().unwrap_or_else(|| "S5".to_string());
            let power = task.power.unwrap_or(1);
            for n in odd_in(range) {
                let series = series.clone();
                let sid = format!("residue_{series}");
                let mut params = params1("n", n as i64);
                params.insert("power".to_string(), power as i64);
                let (sid2, params2) = (sid.clone(), params.clone());
                items.push(WorkItem {
                    statement_id: sid,
                    params,
                    check: Box::new(move || {
                        let start = Instant::now();
                        let spec = preset(&series)?;
                        let text = residue_report(&spec, ((n - 1) / 2) as u32, n, power)?;
                        Ok(CongruenceReport {
                            statement_id: sid2.clone(),
                            params: params2.clone(),
                            status: Status::Pass,
                            witness: Some(text),
                            elapsed: start.elapsed(),
                        })
                    }),
                });
            }
        }
        TaskKind::Modform => {
            // closed-form and L-value checks become work items; the
            // coefficient listing itself is attached to the report afterwards
            let form = Form::parse(&task.id)?;
            let limit = task.limit.unwrap_or(100);
            if task.check_closed_form {
                let sid = format!("{}_closed_form", task.id);
                let params = params1("limit", limit as i64);
                let (sid2, params2) = (sid.clone(), params.clone());
                items.push(WorkItem {
                    statement_id: sid,
                    params,
                    check: Box::new(move || {
                        let start = Instant::now();
                        let a = form_coeffs(form, limit)?;
                        let small = [2u64];
                        let odd = primes_in((3, limit.saturating_sub(1) as u64));
                        for p in small.iter().copied().filter(|p| (*p as usize) < limit).chain(odd)
                        {
                            if closed_form_a(form, p) != a[p as usize] {
                                return Ok(CongruenceReport {
                                    statement_id: sid2.clone(),
                                    params: params2.clone(),
                                    status: Status::Fail,
                                    witness: Some(format!("mismatch at prime {p}")),
                                    elapsed: start.elapsed(),
                                });
                            }
                        }
                        Ok(report_from_bool(&sid2, params2.clone(), true, "", start))
                    }),
                });
            }
            if let Some(s) = task.l_value_s {
                let sid = format!("{}_l_value", task.id);
                let params = params1("s", s as i64);
                let (sid2, params2) = (sid.clone(), params.clone());
                items.push(WorkItem {
                    statement_id: sid,
                    params,
                    check: Box::new(move || {
                        let start = Instant::now();
                        let (v, err) = l_value(form, s, 400_000);
                        Ok(CongruenceReport {
                            statement_id: sid2.clone(),
                            params: params2.clone(),
                            status: Status::Pass,
                            witness: Some(format!("L({s}) ~ {v:.6} (spread {err:.2e})")),
                            elapsed: start.elapsed(),
                        })
                    }),
                });
            }
        }
        TaskKind::Numeric => {
            let id = task.id.clone();
            match id.as_str() {
                "bauer" | "H1" | "H2" | "Lchi4" => {}
                other => return Err(QcError::Parse(format!("unknown numeric id '{other}'"))),
            }
            let id2 = id.clone();
            items.push(WorkItem {
                statement_id: id.clone(),
                params: BTreeMap::new(),
                check: Box::new(move || {
                    let start = Instant::now();
                    let ((v, target), tol) = match id2.as_str() {
                        "bauer" => (numeric_bauer(), 1e-6),
                        "H1" => (numeric_h1(200_000), 1e-2),
                        "H2" => (numeric_h2(), 1e-6),
                        _ => {
                            let (v, _) = dirichlet_l_chi4(2.0, 2_000_000);
                            ((v, std::f64::consts::FRAC_PI_4), 1e-6)
                        }
                    };
                    let ok = (v - target).abs() < tol;
                    Ok(CongruenceReport {
                        statement_id: id2.clone(),
                        params: BTreeMap::new(),
                        status: if ok { Status::Pass } else { Status::Fail },
                        witness: Some(format!("computed {v:.9}, target {target:.9}")),
                        elapsed: start.elapsed(),
                    })
                }),
            });
        }
    }
    Ok(items)
}

/// Run a task on `jobs` worker threads.  With a cache, items recorded as
/// passes are skipped (returned as instant passes) unless `force` is set, and
/// new outcomes are appended afterwards.
pub fn run(
    task: &TaskSpec,
    jobs: usize,
    cache: Option<&mut Cache>,
    force: bool,
) -> Result<RunReport, QcError> {
    let start = Instant::now();
    let items = work_items(task)?;
    let skip_pass = |item: &WorkItem| -> bool {
        !force
            && cache
                .as_ref()
                .map(|c| c.has_pass(&item.statement_id, &item.params))
                .unwrap_or(false)
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| QcError::Parse(format!("worker pool: {e}")))?;
    let results: Result<Vec<CongruenceReport>, QcError> = pool.install(|| {
        use rayon::prelude::*;
        items
            .par_iter()
            .map(|item| {
                if skip_pass(item) {
                    Ok(CongruenceReport {
                        statement_id: item.statement_id.clone(),
                        params: item.params.clone(),
                        status: Status::Pass,
                        witness: None,
                        elapsed: Duration::ZERO,
                    })
                } else {
                    (item.check)()
                }
            })
            .collect()
    });
    let mut results = results?;
    results.sort_by(|a, b| (&a.statement_id, &a.params).cmp(&(&b.statement_id, &b.params)));

    if let Some(cache) = cache {
        cache.record(&results)?;
    }

    let coefficients = if task.kind == TaskKind::Modform {
        let form = Form::parse(&task.id)?;
        let limit = task.limit.unwrap_or(100);
        let a = form_coeffs(form, limit)?;
        Some((1..limit as u64).map(|n| (n, a[n as usize].to_string())).collect())
    } else {
        None
    };

    let summary = summarize(&results);
    Ok(RunReport { task: task.clone(), results, coefficients, summary, wall_time: start.elapsed() })
}

/// One recorded verdict in the append-only cache file.
#[derive(Serialize, Deserialize)]
struct CacheLine {
    key: String,
    status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_sha256: Option<String>,
}

/// Append-only JSON-lines cache keyed by `(statement_id, params)`.
pub struct Cache {
    path: PathBuf,
    entries: HashMap<String, (Status, Option<String>)>,
}

fn cache_key(statement_id: &str, params: &BTreeMap<String, i64>) -> String {
    let mut key = statement_id.to_string();
    for (k, v) in params {
        key.push_str(&format!("|{k}={v}"));
    }
    key
}

fn hash_witness(w: &Option<String>) -> Option<String> {
    w.as_ref().map(|s| {
        let mut h = Sha256::new();
        h.update(s.as_bytes());
        format!("{:x}", h.finalize())
    })
}

impl Cache {
    /// Load a cache file, tolerating a missing file.  A corrupt file is
    /// reported on stderr and treated as empty (full recompute).
    pub fn load(path: &Path) -> Result<Cache, QcError> {
        let mut entries = HashMap::new();
        match std::fs::read_to_string(path) {
            Ok(text) => {
                for line in text.lines().filter(|l| !l.trim().is_empty()) {
                    match serde_json::from_str::<CacheLine>(line) {
                        Ok(cl) => {
                            entries.insert(cl.key, (cl.status, cl.witness_sha256));
                        }
                        Err(e) => {
                            eprintln!(
                                "warning: corrupt cache line in {}: {e}; recomputing everything",
                                path.display()
                            );
                            entries.clear();
                            break;
                        }
                    }
                }
            }
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {}
            Err(e) => {
                return Err(QcError::Parse(format!("cannot read cache {}: {e}", path.display())))
            }
        }
        Ok(Cache { path: path.to_path_buf(), entries })
    }

    /// The recorded verdict for a key, if any.
    pub fn lookup(
        &self,
        statement_id: &str,
        params: &BTreeMap<String, i64>,
    ) -> Option<&(Status, Option<String>)> {
        self.entries.get(&cache_key(statement_id, params))
    }

    /// Whether this item is recorded as passed (and so may be skipped).
    pub fn has_pass(&self, statement_id: &str, params: &BTreeMap<String, i64>) -> bool {
        matches!(self.lookup(statement_id, params), Some((Status::Pass, _)))
    }

    /// Append new outcomes; keys already present are not rewritten.
    pub fn record(&mut self, results: &[CongruenceReport]) -> Result<(), QcError> {
        let mut file = std::fs::OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .map_err(|e| {
                QcError::Parse(format!("cannot open cache {}: {e}", self.path.display()))
            })?;
        for r in results {
            let key = cache_key(&r.statement_id, &r.params);
            if self.entries.contains_key(&key) {
                continue;
            }
            let line = CacheLine {
                key: key.clone(),
                status: r.status,
                witness_sha256: hash_witness(&r.witness),
            };
            let json = serde_json::to_string(&line)
                .map_err(|e| QcError::Parse(format!("cache serialization: {e}")))?;
            writeln!(file, "{json}").map_err(|e| {
                QcError::Parse(format!("cannot write cache {}: {e}", self.path.display()))
            })?;
            self.entries.insert(key, (r.status, line.witness_sha256));
        }
        Ok(())
    }
}

/// Output format for [`emit_format`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl Format {
    pub fn parse(s: &str) -> Result<Format, QcError> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(QcError::Parse(format!("unknown format '{other}'"))),
        }
    }
}

fn params_text(params: &BTreeMap<String, i64>) -> String {
    params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
}

fn status_str(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Undefined => "undefined",
        Status::Skipped => "skipped",
    }
}

/// Render a report.  JSON is the machine-readable schema; CSV lists
/// coefficients as `n,a_n` when present and one row per result otherwise;
/// text is one line per result plus a summary line.
pub fn emit_format(report: &RunReport, format: Format) -> Result<String, QcError> {
    match format {
        Format::Json => serde_json::to_string_pretty(report)
            .map_err(|e| QcError::Parse(format!("emit json: {e}"))),
        Format::Csv => {
            let mut out = String::new();
            if let Some(coeffs) = &report.coefficients {
                out.push_str("n,a_n\n");
                for (n, a) in coeffs {
                    out.push_str(&format!("{n},{a}\n"));
                }
            } else {
                out.push_str("statement_id,params,status,witness\n");
                for r in &report.results {
                    out.push_str(&format!(
                        "{},{},{},{}\n",
                        r.statement_id,
                        params_text(&r.params).replace(' ', ";"),
                        status_str(r.status),
                        r.witness.clone().unwrap_or_default().replace(',', ";"),
                    ));
                }
            }
            Ok(out)
        }
        Format::Text => {
            let mut out = String::new();
            for r in &report.results {
                out.push_str(&format!(
                    "{:<22} {:<18} {}",
                    r.statement_id,
                    params_text(&r.params),
                    status_str(r.status),
                ));
                if let Some(w) = &r.witness {
                    out.push_str(&format!("  ({w})"));
                }
                out.push('\n');
            }
            if let Some(coeffs) = &report.coefficients {
                for (n, a) in coeffs {
                    out.push_str(&format!("a({n}) = {a}\n"));
                }
            }
            let s = report.summary;
            out.push_str(&format!(
                "summary: {} passed, {} failed, {} undefined ({} ms)\n",
                s.passed,
                s.failed,
                s.undefined,
                report.wall_time.as_millis()
            ));
            Ok(out)
        }
    }
}

//! Library backing the `shuffle-cli` binary: single classifications, the
//! classical-table and cascade verification suites, and resumable JSONL
//! conjecture sweeps. The binary in `main.rs` is a thin argument-parsing
//! wrapper over the `run_*` functions here so that the acceptance suite can
//! drive the exact same code paths in-process.

use std::collections::HashSet;
use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::sync::mpsc;
use std::sync::Mutex;
use std::time::Instant;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use serde_json::json;

use shuffle_groups::build::{DeckSpec, PileFamily, PileGroupSpec};
use shuffle_groups::cascade::{cascade_groups, verify_cascade_lemmas, CascadeSpec};
use shuffle_groups::classify::{
    classification_matches, classify, derive_seed, expected_structure, Classification,
    ClassifyBudget, ClassifyError, Expected, StructureTag,
};
use shuffle_groups::digits::pow;

/// Exit code for a successful run with no violated predictions.
pub const EXIT_OK: i32 = 0;
/// Exit code when a proven (non-conjectural) prediction is violated.
pub const EXIT_MISMATCH: i32 = 1;
/// Exit code for usage errors.
pub const EXIT_USAGE: i32 = 2;

/// One serialized classification result (one JSONL line in sweep outputs).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ResultRecord {
    /// Number of piles.
    pub k: usize,
    /// Cards per pile.
    pub n: usize,
    /// Pile-group spec string (e.g. `"sym"`, `"agl:1:5"`).
    pub pile_group: String,
    /// Deck size `kn`.
    pub degree: usize,
    /// Exact group order, decimal string.
    pub order: String,
    /// Transitivity on cards.
    pub transitive: bool,
    /// Primitivity; `null` when not computed.
    pub primitive: Option<bool>,
    /// Containment in the alternating group.
    pub in_alt: bool,
    /// 2-transitivity; `null` when not computed.
    pub two_transitive: Option<bool>,
    /// Identified structure: `{"tag": ..., ...params}`.
    pub classification: serde_json::Value,
    /// Predicted structure with `conjectural` flag, when one exists.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<serde_json::Value>,
    /// Agreement with the prediction; present iff `expected` is.
    #[serde(rename = "match", skip_serializing_if = "Option::is_none")]
    pub match_: Option<bool>,
    /// Derived per-task seed actually used.
    pub seed: u64,
    /// Wall-clock classification time.
    pub elapsed_ms: u64,
    /// Free-form note (e.g. budget exceeded).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Serializes a structure tag as a flat JSON object.
pub fn tag_to_json(tag: &StructureTag) -> serde_json::Value {
    match tag {
        StructureTag::AltFull => json!({"tag": "alt_full"}),
        StructureTag::SymFull => json!({"tag": "sym_full"}),
        StructureTag::WreathCyclic { base, cycle_len } => {
            json!({"tag": "wreath_cyclic", "base": base, "cycle_len": cycle_len})
        }
        StructureTag::ProductAction { ell, m } => {
            json!({"tag": "product_action", "ell": ell, "m": m})
        }
        StructureTag::AffineFull { p, d } => json!({"tag": "affine_full", "p": p, "d": d}),
        StructureTag::AffineProper { p, d } => json!({"tag": "affine_proper", "p": p, "d": d}),
        StructureTag::BnFull { n } => json!({"tag": "bn_full", "n": n}),
        StructureTag::KerSgn { n } => json!({"tag": "ker_sgn", "n": n}),
        StructureTag::KerSgnBar { n } => json!({"tag": "ker_sgnbar", "n": n}),
        StructureTag::KerSgnProd { n } => json!({"tag": "ker_sgn_prod", "n": n}),
        StructureTag::KerBoth { n } => json!({"tag": "ker_both", "n": n}),
        StructureTag::Exceptional { name } => json!({"tag": "exceptional", "name": name}),
        StructureTag::Other => json!({"tag": "other"}),
    }
}

fn expected_to_json(e: &Expected) -> serde_json::Value {
    let mut v = tag_to_json(&e.tag);
    let obj = v.as_object_mut().expect("tag json is an object");
    if let Some(o) = &e.order {
        obj.insert("order".into(), json!(o.to_string()));
    }
    obj.insert("conjectural".into(), json!(e.conjectural));
    v
}

/// Classifies one `(pile_group, k, n)` task and packages the result;
/// budget violations become an `other` record with a note, never a crash.
pub fn classify_record(
    pile_group: &str,
    k: usize,
    n: usize,
    budget: ClassifyBudget,
    base_seed: u64,
) -> Result<ResultRecord, String> {
    let start = Instant::now();
    let spec = PileGroupSpec::parse(pile_group, k).map_err(|e| e.to_string())?;
    let deck = DeckSpec::new(k, n).map_err(|e| e.to_string())?;
    let seed = derive_seed(k, n, &spec.spec_string(), base_seed);
    let expected = expected_structure(&spec, deck).map_err(|e| e.to_string())?;

    let mut note = None;
    let classification = match classify(&spec, deck, budget, base_seed) {
        Ok(c) => c,
        Err(ClassifyError::BudgetExceeded { degree, budget }) => {
            note = Some(format!("budget exceeded: degree {degree} > {budget}"));
            Classification {
                tag: StructureTag::Other,
                order: BigUint::from(0u32),
                transitive: false,
                primitive: None,
                two_transitive: None,
                in_alt: false,
            }
        }
        Err(e) => return Err(e.to_string()),
    };
    let match_ = if note.is_none() {
        expected
            .as_ref()
            .map(|e| classification_matches(&classification, e))
    } else {
        None
    };
    Ok(ResultRecord {
        k,
        n,
        pile_group: spec.spec_string(),
        degree: deck.degree(),
        order: classification.order.to_string(),
        transitive: classification.transitive,
        primitive: classification.primitive,
        in_alt: classification.in_alt,
        two_transitive: classification.two_transitive,
        classification: tag_to_json(&classification.tag),
        expected: expected.as_ref().map(expected_to_json),
        match_,
        seed,
        elapsed_ms: start.elapsed().as_millis() as u64,
        note,
    })
}

/// Whether a record violates a *proven* prediction (conjectural mismatches
/// are findings, not failures).
pub fn is_hard_mismatch(record: &ResultRecord) -> bool {
    let conjectural = record
        .expected
        .as_ref()
        .and_then(|e| e.get("conjectural"))
        .and_then(|c| c.as_bool())
        .unwrap_or(false);
    record.match_ == Some(false) && !conjectural
}

/// `classify` subcommand: one record to stdout (JSONL with `json`, otherwise
/// a human-readable summary). Returns the process exit code.
pub fn run_classify(
    pile_group: &str,
    k: usize,
    n: usize,
    budget: ClassifyBudget,
    seed: u64,
    json_output: bool,
) -> i32 {
    let record = match classify_record(pile_group, k, n, budget, seed) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    if json_output {
        println!("{}", serde_json::to_string(&record).expect("serializable"));
    } else {
        println!(
            "Sh({}, {}) on {} cards (k = {}): order {}",
            record.pile_group, record.n, record.degree, record.k, record.order
        );
        println!(
            "  transitive: {}  primitive: {}  2-transitive: {}  in Alt: {}",
            record.transitive,
            record
                .primitive
                .map_or("-".into(), |b| b.to_string()),
            record
                .two_transitive
                .map_or("-".into(), |b| b.to_string()),
            record.in_alt
        );
        println!("  classification: {}", record.classification);
        match (&record.expected, record.match_) {
            (Some(e), Some(m)) => println!("  expected: {e}  match: {m}"),
            _ => println!("  expected: none (no known claim for this case)"),
        }
        if let Some(note) = &record.note {
            println!("  note: {note}");
        }
    }
    if record.note.is_some() {
        EXIT_USAGE
    } else if is_hard_mismatch(&record) {
        EXIT_MISMATCH
    } else {
        if record.match_ == Some(false) {
            eprintln!("finding: conjectural prediction violated for k={k} n={n}");
        }
        EXIT_OK
    }
}

/// `table1` subcommand: classifies `Sh(Sym(2), n)` for `2 ≤ n ≤ n_max` and
/// compares each row to the proven classification of shuffle groups on `2n`
/// cards. Returns (records, exit code).
pub fn run_table1(n_max: usize, budget: ClassifyBudget, seed: u64) -> (Vec<ResultRecord>, i32) {
    let mut records = Vec::new();
    let mut all_match = true;
    for n in 2..=n_max {
        match classify_record("sym", 2, n, budget, seed) {
            Ok(r) => {
                let ok = r.match_ == Some(true);
                println!(
                    "n={:<3} degree={:<3} order={:<24} {:<40} {}",
                    n,
                    r.degree,
                    r.order,
                    r.classification.to_string(),
                    if ok { "match" } else { "MISMATCH" }
                );
                all_match &= ok;
                records.push(r);
            }
            Err(e) => {
                eprintln!("error at n={n}: {e}");
                all_match = false;
            }
        }
    }
    let rows = records.len();
    println!(
        "table rows matched: {}/{}",
        records.iter().filter(|r| r.match_ == Some(true)).count(),
        rows
    );
    (records, if all_match { EXIT_OK } else { EXIT_MISMATCH })
}

/// Outcome of one cascade verification run.
#[derive(Debug)]
pub struct CascadeOutcome {
    /// Which branch of the cascading classification applies (1–5).
    pub branch: u8,
    /// `|G_t|` for `t = 1, …, e`.
    pub orders: Vec<BigUint>,
    /// All five lemma identities held.
    pub lemmas_passed: bool,
    /// Every `G_t` matched its predicted structure.
    pub classifications_match: bool,
    /// Branch-specific group equalities / index claims held.
    pub branch_claims_hold: bool,
}

/// The branch of the cascading classification for top parameters `(2^e, n)`.
pub fn cascade_branch(e: u32, n: usize) -> u8 {
    match (pow(2, e), n) {
        (4, 3) => 1,
        (4, 6) => 2,
        (8, 3) => 3,
        (4, m) if m % 2 == 1 && m >= 5 => 4,
        _ => 5,
    }
}

/// `cascade` subcommand: verifies the exact cascade identities for `(e, n)`
/// and compares every `G_t` to its predicted structure. Returns the exit
/// code; `Err` means a usage error.
pub fn run_cascade(e: u32, n: usize, max_degree: usize, seed: u64) -> Result<i32, String> {
    let spec = CascadeSpec::new(e, n).map_err(|err| err.to_string())?;
    if spec.degree() > max_degree {
        return Err(format!(
            "degree {} exceeds cascade verification cap {max_degree}",
            spec.degree()
        ));
    }
    let outcome = cascade_outcome(spec, seed)?;
    println!(
        "cascade e={e} n={n}: branch ({}) | orders: {}",
        outcome.branch,
        outcome
            .orders
            .iter()
            .map(|o| o.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );
    println!(
        "  lemma identities: {}  structure predictions: {}  branch claims: {}",
        verdict(outcome.lemmas_passed),
        verdict(outcome.classifications_match),
        verdict(outcome.branch_claims_hold)
    );
    Ok(
        if outcome.lemmas_passed && outcome.classifications_match && outcome.branch_claims_hold {
            EXIT_OK
        } else {
            EXIT_MISMATCH
        },
    )
}

fn verdict(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

/// Runs the full cascade verification for `spec` and gathers the outcome.
pub fn cascade_outcome(spec: CascadeSpec, seed: u64) -> Result<CascadeOutcome, String> {
    let (e, n) = (spec.e(), spec.n());
    let report = verify_cascade_lemmas(spec).map_err(|err| err.to_string())?;
    let lemmas_passed = report.all_passed();
    for check in &report.checks {
        if !check.passed {
            eprintln!(
                "  lemma failure: {} ({})",
                check.name,
                check.counterexample.as_deref().unwrap_or("no detail")
            );
        }
    }

    // Structure prediction for each level, through the general classifier.
    let budget = ClassifyBudget::default();
    let mut classifications_match = true;
    for t in 1..=e {
        let k_t = pow(2, t);
        let n_t = pow(2, e - t) * n;
        let spec_string = format!("elem2:{t}");
        let record = classify_record(&spec_string, k_t, n_t, budget, seed)?;
        if record.match_ != Some(true) {
            classifications_match = false;
            eprintln!(
                "  G_{t} = Sh(elem2:{t}, {n_t}): classification {} does not match expected {:?}",
                record.classification, record.expected
            );
        }
    }

    // Branch-specific group relations, verified as exact group identities.
    let groups = cascade_groups(spec).map_err(|err| err.to_string())?;
    let orders = report.orders.clone();
    let branch = cascade_branch(e, n);
    let branch_claims_hold = match branch {
        1 => orders[0] == &orders[1] * 2u32,
        2 | 3 | 5 => {
            // All levels are literally the same group.
            let mut ok = true;
            for t in 1..groups.len() {
                ok &= groups[t].equals(&groups[0]).map_err(|e| e.to_string())?;
            }
            ok
        }
        4 => {
            orders[0] == &orders[1] * 2u32
                && groups[1]
                    .is_subgroup_of(&groups[0])
                    .map_err(|e| e.to_string())?
        }
        _ => unreachable!(),
    };

    Ok(CascadeOutcome {
        branch,
        orders,
        lemmas_passed,
        classifications_match,
        branch_claims_hold,
    })
}

/// Configuration of a sweep run.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    /// Pile-group spec string applied at every `k`.
    pub pile_group: String,
    /// Pile counts to sweep.
    pub k_list: Vec<usize>,
    /// Largest `n` (inclusive); `n` starts at 2.
    pub n_max: usize,
    /// Worker threads.
    pub jobs: usize,
    /// Base seed; per-task seeds are derived from it.
    pub seed: u64,
    /// Skip `(k, n)` pairs already present in the output file.
    pub resume: bool,
    /// Classification budgets.
    pub budget: ClassifyBudget,
}

/// True iff `n` is a positive power of `k` (including `n == k`).
fn is_power_of(n: usize, k: usize) -> bool {
    if k < 2 {
        return n == k;
    }
    let mut m = k;
    while m < n {
        m = match m.checked_mul(k) {
            Some(v) => v,
            None => return false,
        };
    }
    m == n
}

/// The sweep's exclusion rule: the conjectural Alt/Sym classification
/// excludes `n = k^f` (shuffle groups there are wreath products), and for
/// `Sym(4)` additionally every `n = 2^f`.
pub fn sweep_excluded(family: &PileFamily, k: usize, n: usize) -> bool {
    match family {
        PileFamily::Sym => is_power_of(n, k) || (k == 4 && n.is_power_of_two()),
        PileFamily::Cyclic => is_power_of(n, k),
        _ => false,
    }
}

/// `sweep` subcommand (and its `conjecture` alias): classifies every
/// non-excluded `(k, n)` task over a worker pool and appends JSONL records
/// to `out`. Deterministic: per-task seeds derive from `(k, n, spec, seed)`,
/// results are written in task order regardless of `jobs`.
pub fn run_sweep(config: &SweepConfig, out: &Path) -> Result<i32, String> {
    let done: HashSet<(usize, usize, String)> = if config.resume && out.exists() {
        let file = std::fs::File::open(out).map_err(|e| e.to_string())?;
        BufReader::new(file)
            .lines()
            .filter_map(|line| {
                let line = line.ok()?;
                let v: serde_json::Value = serde_json::from_str(&line).ok()?;
                Some((
                    v.get("k")?.as_u64()? as usize,
                    v.get("n")?.as_u64()? as usize,
                    v.get("pile_group")?.as_str()?.to_string(),
                ))
            })
            .collect()
    } else {
        HashSet::new()
    };

    let mut tasks = Vec::new();
    for &k in &config.k_list {
        let spec = PileGroupSpec::parse(&config.pile_group, k).map_err(|e| e.to_string())?;
        for n in 2..=config.n_max {
            if sweep_excluded(&spec.family, k, n) {
                continue;
            }
            if done.contains(&(k, n, spec.spec_string())) {
                continue;
            }
            tasks.push((k, n));
        }
    }

    let results = run_pool(config, &tasks)?;

    let mut file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(out)
        .map_err(|e| e.to_string())?;
    let mut hard_mismatches = 0usize;
    let mut findings = 0usize;
    for record in &results {
        if is_hard_mismatch(record) {
            hard_mismatches += 1;
        } else if record.match_ == Some(false) {
            findings += 1;
            eprintln!(
                "finding: conjectural prediction violated at k={} n={}",
                record.k, record.n
            );
        }
        writeln!(
            file,
            "{}",
            serde_json::to_string(record).expect("serializable")
        )
        .map_err(|e| e.to_string())?;
    }
    println!(
        "sweep complete: {} new records ({} skipped), {} proven-claim mismatches, {} findings",
        results.len(),
        done.len(),
        hard_mismatches,
        findings
    );
    Ok(if hard_mismatches == 0 {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    })
}

/// Distributes tasks over `jobs` workers; results come back in task order.
fn run_pool(config: &SweepConfig, tasks: &[(usize, usize)]) -> Result<Vec<ResultRecord>, String> {
    let jobs = config.jobs.max(1);
    let queue = Mutex::new(tasks.iter().copied().enumerate().collect::<Vec<_>>());
    let (tx, rx) = mpsc::channel::<(usize, Result<ResultRecord, String>)>();
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            let tx = tx.clone();
            let queue = &queue;
            let config = &*config;
            scope.spawn(move || loop {
                let task = queue.lock().expect("queue lock").pop();
                let Some((idx, (k, n))) = task else { break };
                let result =
                    classify_record(&config.pile_group, k, n, config.budget, config.seed);
                if tx.send((idx, result)).is_err() {
                    break;
                }
            });
        }
        drop(tx);
        let mut slots: Vec<Option<ResultRecord>> = vec![None; tasks.len()];
        for (idx, result) in rx {
            slots[idx] = Some(result?);
        }
        Ok(slots.into_iter().map(|s| s.expect("all tasks ran")).collect())
    })
}

use std::time::Instant;

use clap::ValueEnum;
use listdist::lists::{
    check_k, list_number_characterization, CharacterizationOptions, DirectOptions, KResult, ListNumberCharacterization,
    Strategy,
};
use listdist::{automorphisms, min_labels, satisfies, AutomorphismGroup, Error, Graph, Labeling, Predicate, Result};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::input::GraphInfo;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Run the direct oracle and, when it fits the caps, the characterization.
    Both,
    Direct,
    Characterization,
    /// Skip list numbers entirely.
    None,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Membership,
    Counting,
    Both,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Strategy {
        match s {
            StrategyArg::Membership => Strategy::Membership,
            StrategyArg::Counting => Strategy::Counting,
            StrategyArg::Both => Strategy::Both,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Settings {
    pub group_cap: usize,
    pub method: Method,
    pub k_max: Option<usize>,
    pub characterization: CharacterizationOptions,
    pub direct: DirectOptions,
    pub timing: bool,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            group_cap: listdist::DEFAULT_GROUP_CAP,
            method: Method::Both,
            k_max: None,
            characterization: CharacterizationOptions::default(),
            direct: DirectOptions::default(),
            timing: false,
        }
    }
}

/// Direct-oracle results for `k = 1, 2, ...`.
#[derive(Clone, Debug, Serialize)]
pub struct DirectSweep {
    pub per_k: Vec<KResult>,
    pub value: Option<usize>,
}

/// Runs the direct oracle. With an explicit `k_max` every `k` up to it is
/// reported; otherwise the sweep starts at `first` and stops at the first
/// pass (or at `n`).
pub fn direct_sweep(
    pred: Predicate,
    g: &Graph,
    aut: &AutomorphismGroup,
    first: usize,
    k_max: Option<usize>,
    opts: &DirectOptions,
) -> Result<DirectSweep> {
    let mut per_k = Vec::new();
    let mut value = None;
    let (from, to) = match k_max {
        Some(k) => (1, k),
        None => (first.max(1), g.order().max(first).max(1)),
    };
    for k in from..=to {
        let r = check_k(pred, g, aut, k, opts)?;
        if r.passed && value.is_none() {
            value = Some(k);
        }
        per_k.push(r);
        if value.is_some() && k_max.is_none() {
            break;
        }
    }
    Ok(DirectSweep { per_k, value })
}

/// Reason the characterization sweep is out of reach, judged before any
/// work is done: every `m` up to `m_max` enumerates up to `m^n` labelings.
pub fn characterization_infeasible(n: usize, d: usize, opts: &CharacterizationOptions) -> Option<String> {
    let m_max = opts.m_max.unwrap_or((n * d) as u32).max(d as u32);
    let candidates = (m_max as f64).powi(n as i32);
    (candidates > opts.labeling_cap as f64).then(|| {
        format!(
            "m_max^n = {m_max}^{n} labelings exceeds the labeling cap {}",
            opts.labeling_cap
        )
    })
}

/// Outcome of the list-number computation for one predicate.
#[derive(Clone, Debug)]
pub struct ListOutcome {
    pub direct: Option<DirectSweep>,
    pub characterization: Option<ListNumberCharacterization>,
    pub skipped: Vec<String>,
}

impl ListOutcome {
    pub fn value(&self) -> Option<usize> {
        self.direct
            .as_ref()
            .and_then(|d| d.value)
            .or(self.characterization.as_ref().map(|c| c.value))
    }

    pub fn path(&self) -> &'static str {
        match (&self.direct, &self.characterization) {
            (Some(_), Some(_)) => "both",
            (Some(_), None) => "direct",
            (None, Some(_)) => "characterization",
            (None, None) => "none",
        }
    }

    /// All computed paths produced the same value.
    pub fn agreement(&self) -> bool {
        let d = self.direct.as_ref().map(|d| d.value);
        let c = self.characterization.as_ref().map(|c| Some(c.value));
        match (d, c) {
            (Some(a), Some(b)) => a == b,
            (Some(a), None) => a.is_some(),
            _ => true,
        }
    }

    pub fn m_max(&self) -> Option<u32> {
        self.characterization
            .as_ref()
            .and_then(|c| c.reports.last())
            .map(|r| r.m_max)
    }
}

pub fn list_outcome(
    pred: Predicate,
    g: &Graph,
    aut: &AutomorphismGroup,
    base: usize,
    settings: &Settings,
) -> Result<ListOutcome> {
    let mut out = ListOutcome {
        direct: None,
        characterization: None,
        skipped: Vec::new(),
    };
    if matches!(settings.method, Method::Both | Method::Direct) {
        match direct_sweep(pred, g, aut, base, settings.k_max, &settings.direct) {
            Ok(sweep) => out.direct = Some(sweep),
            Err(e) if e.is_cap_overflow() && settings.method == Method::Both => {
                out.skipped.push(format!("direct: {e}"))
            }
            Err(e) => return Err(e),
        }
    }
    if matches!(settings.method, Method::Both | Method::Characterization) {
        let opts = &settings.characterization;
        match characterization_infeasible(g.order(), base, opts) {
            Some(reason) if settings.method == Method::Both => out.skipped.push(format!("characterization: {reason}")),
            Some(reason) => return Err(Error::cap("characterization sweep", reason, opts.labeling_cap)),
            None => match list_number_characterization(pred, g, aut, opts) {
                Ok(c) => out.characterization = Some(c),
                Err(e) if e.is_cap_overflow() && settings.method == Method::Both => {
                    out.skipped.push(format!("characterization: {e}"))
                }
                Err(e) => return Err(e),
            },
        }
    }
    Ok(out)
}

fn check_witness(pred: Predicate, g: &Graph, aut: &AutomorphismGroup, w: &Labeling) -> Result<()> {
    if satisfies(pred, g, aut, w)? {
        Ok(())
    } else {
        Err(Error::Internal(format!("witness {w} fails {pred}")))
    }
}

/// The `invariants` report as a JSON value.
pub fn invariants_report(g: &Graph, settings: &Settings) -> Result<Value> {
    let mut timing = Map::new();
    let clock = Instant::now();
    let aut = automorphisms(g, settings.group_cap)?;
    timing.insert("automorphisms".into(), json!(clock.elapsed().as_millis() as u64));

    let mut root = Map::new();
    root.insert(
        "graph".into(),
        serde_json::to_value(GraphInfo::of(g)).expect("serializable"),
    );
    root.insert("aut_order".into(), json!(aut.len()));
    let mut agreement = true;
    let sections = [
        (Predicate::Distinguishing, "distinguishing", "D", "D_l"),
        (Predicate::Proper, "proper", "chi", "chi_l"),
        (
            Predicate::ProperDistinguishing,
            "proper_distinguishing",
            "chi_D",
            "chi_Dl",
        ),
    ];
    for (pred, section, base_key, list_key) in sections {
        let clock = Instant::now();
        let found = min_labels(pred, g, &aut)?;
        check_witness(pred, g, &aut, &found.witness)?;
        let mut entry = Map::new();
        entry.insert(base_key.into(), json!(found.count));
        entry.insert("witness".into(), json!(found.witness));
        if settings.method != Method::None && g.order() > 0 {
            let lists = list_outcome(pred, g, &aut, found.count, settings)?;
            if let Some(v) = lists.value() {
                entry.insert(list_key.into(), json!(v));
            }
            entry.insert("path".into(), json!(lists.path()));
            if let Some(m) = lists.m_max() {
                entry.insert("m_max".into(), json!(m));
            }
            entry.insert("agreement".into(), json!(lists.agreement()));
            if !lists.skipped.is_empty() {
                entry.insert("skipped".into(), json!(lists.skipped));
            }
            agreement &= lists.agreement();
        }
        timing.insert(section.into(), json!(clock.elapsed().as_millis() as u64));
        root.insert(section.into(), Value::Object(entry));
    }
    if settings.method != Method::None {
        root.insert("agreement".into(), json!(agreement));
    }
    if settings.timing {
        root.insert("timing_ms".into(), Value::Object(timing));
    }
    Ok(Value::Object(root))
}

/// The `listnum` report for a single predicate.
pub fn listnum_report(g: &Graph, pred: Predicate, settings: &Settings) -> Result<Value> {
    let aut = automorphisms(g, settings.group_cap)?;
    let found = min_labels(pred, g, &aut)?;
    check_witness(pred, g, &aut, &found.witness)?;
    let mut root = Map::new();
    root.insert(
        "graph".into(),
        serde_json::to_value(GraphInfo::of(g)).expect("serializable"),
    );
    root.insert("predicate".into(), json!(pred));
    root.insert("base".into(), json!(found.count));
    root.insert("witness".into(), json!(found.witness));
    let lists = list_outcome(pred, g, &aut, found.count, settings)?;
    if let Some(d) = &lists.direct {
        root.insert("direct".into(), serde_json::to_value(d).expect("serializable"));
    }
    if let Some(c) = &lists.characterization {
        root.insert(
            "characterization".into(),
            serde_json::to_value(c).expect("serializable"),
        );
    }
    if !lists.skipped.is_empty() {
        root.insert("skipped".into(), json!(lists.skipped));
    }
    if let Some(v) = lists.value() {
        root.insert("value".into(), json!(v));
    }
    root.insert("path".into(), json!(lists.path()));
    root.insert("agreement".into(), json!(lists.agreement()));
    Ok(Value::Object(root))
}

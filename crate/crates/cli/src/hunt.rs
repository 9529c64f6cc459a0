use std::io::{self, Write};

use listdist::lists::{hunt_graph, GraphVerdict, HuntOptions};
use listdist::{encode_graph6, parse_graph6, Predicate, Result};
use rayon::prelude::*;
use serde_json::json;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct HuntSummary {
    pub scanned: usize,
    pub skipped: usize,
    pub hits: usize,
    /// Hits the brute-force re-check could not confirm.
    pub unconfirmed: usize,
}

/// Scans graph6 lines, writing one JSON line per hit to `out`, one per
/// skipped line to `skips`, and a closing summary line to `out`. Blank
/// lines are ignored; line numbers are 1-based.
pub fn run_hunt(
    text: &str,
    pred: Predicate,
    opts: &HuntOptions,
    jobs: usize,
    out: &mut impl Write,
    skips: &mut impl Write,
) -> io::Result<HuntSummary> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let examine = |line: &str| -> Result<(String, usize, GraphVerdict)> {
        let g = parse_graph6(line)?;
        let verdict = hunt_graph(pred, &g, opts)?;
        Ok((encode_graph6(&g), g.order(), verdict))
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(io::Error::other)?;
    let results: Vec<_> = pool.install(|| lines.par_iter().map(|&(no, l)| (no, examine(l))).collect());

    let mut summary = HuntSummary {
        scanned: lines.len(),
        ..HuntSummary::default()
    };
    for (line, result) in results {
        match result {
            Ok((graph6, n, verdict)) => {
                if let Some((assignment, reverified)) = verdict.violation {
                    summary.hits += 1;
                    if !reverified {
                        summary.unconfirmed += 1;
                    }
                    let hit = json!({
                        "line": line,
                        "graph6": graph6,
                        "n": n,
                        "predicate": pred,
                        "base": verdict.base,
                        "assignment": assignment.lists(),
                        "reverified": reverified,
                    });
                    writeln!(out, "{hit}")?;
                }
            }
            Err(e) => {
                summary.skipped += 1;
                writeln!(
                    skips,
                    "{}",
                    json!({ "skip": { "line": line, "reason": e.to_string() } })
                )?;
            }
        }
    }
    let closing = json!({
        "summary": {
            "predicate": pred,
            "scanned": summary.scanned,
            "skipped": summary.skipped,
            "hits": summary.hits,
        }
    });
    writeln!(out, "{closing}")?;
    Ok(summary)
}

//! Seeded property suites behind `listdist verify-props`.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use clap::ValueEnum;
use listdist::counting::{
    binomial, enumerate_b, total_sequences, union_count_paper, union_count_recurrence, union_count_subsets, Count,
    FunctionFamily, DEFAULT_MAX_FUNCTIONS, DEFAULT_SEQUENCE_CAP,
};
use listdist::labelset::LabelSet;
use listdist::lists::{
    canonical_form, characterization_holds_at, list_number_characterization, list_number_direct, select_satisfying,
    CanonicalAssignments, CharacterizationOptions, ConstructiveLabeler, DirectOptions, ListAssignment, Strategy,
    DEFAULT_PRODUCT_CAP,
};
use listdist::{
    automorphisms, family::paw, generate_family, satisfies, Family, Graph, Labeling, Predicate, Result,
    DEFAULT_GROUP_CAP,
};
use rand::seq::index::sample;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Counting,
    Friendship,
    Book,
    Canonical,
    Characterization,
    All,
}

impl Suite {
    pub fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![
                Suite::Counting,
                Suite::Friendship,
                Suite::Book,
                Suite::Canonical,
                Suite::Characterization,
            ],
            s => vec![s],
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Random instances for the counting and canonical suites.
    pub instances: usize,
    /// Random list assignments per `n` for the constructive suites.
    pub trials: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 42,
            instances: 100,
            trials: 1000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub suite: Suite,
    pub instances: usize,
    pub passed: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl SuiteResult {
    fn new(suite: Suite) -> Self {
        SuiteResult {
            suite,
            instances: 0,
            passed: 0,
            counterexample: None,
        }
    }

    fn record(&mut self, outcome: Result<Option<String>>) {
        self.instances += 1;
        let failure = match outcome {
            Ok(None) => None,
            Ok(Some(why)) => Some(why),
            Err(e) => Some(format!("error: {e}")),
        };
        match failure {
            None => self.passed += 1,
            Some(why) => {
                self.counterexample.get_or_insert(why);
            }
        }
    }

    pub fn ok(&self) -> bool {
        self.passed == self.instances
    }
}

/// Runs one suite. Each suite seeds its own generator from `config.seed`
/// so results do not depend on which other suites ran.
pub fn run_suite(suite: Suite, config: &SuiteConfig) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ (suite as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let mut result = SuiteResult::new(suite);
    match suite {
        Suite::Counting => (0..config.instances).for_each(|_| result.record(counting_instance(&mut rng))),
        Suite::Friendship => constructive(&mut result, &mut rng, config.trials, Family::Friendship),
        Suite::Book => constructive(&mut result, &mut rng, config.trials, Family::Book),
        Suite::Canonical => canonical(&mut result, &mut rng, config.instances),
        Suite::Characterization => characterization(&mut result),
        Suite::All => unreachable!("expanded by the caller"),
    }
    result
}

/// A random family with n ≤ 4, t ≤ 4, d ≤ 3 and d ≤ m ≤ 5.
pub fn random_family(rng: &mut impl Rng) -> FunctionFamily {
    let n = rng.gen_range(1..=4usize);
    let t = rng.gen_range(1..=4usize);
    let m = rng.gen_range(1..=5u32);
    let d = rng.gen_range(1..=m.min(3));
    let functions = (0..t)
        .map(|_| Labeling::new((0..n).map(|_| rng.gen_range(1..=m)).collect()).expect("labels are positive"))
        .collect();
    FunctionFamily::new(functions, m, d).expect("valid by construction")
}

fn describe(fam: &FunctionFamily) -> String {
    let fs: Vec<String> = fam.functions().iter().map(|f| f.to_string()).collect();
    format!("m={} d={} f={}", fam.universe(), fam.list_size(), fs.join(" "))
}

fn counting_instance(rng: &mut ChaCha8Rng) -> Result<Option<String>> {
    let fam = random_family(rng);
    let cap = DEFAULT_MAX_FUNCTIONS;
    let brute = Count::from(enumerate_b(&fam, DEFAULT_SEQUENCE_CAP)?.len());
    let paper = union_count_paper(&fam, cap)?;
    let subsets = union_count_subsets(&fam, cap)?;
    let recurrence = union_count_recurrence(&fam, cap)?;
    if paper != brute || subsets != brute || recurrence != brute {
        return Ok(Some(format!(
            "{}: paper {paper}, subsets {subsets}, recurrence {recurrence}, enumeration {brute}",
            describe(&fam)
        )));
    }
    if brute > total_sequences(fam.domain(), fam.universe(), fam.list_size())? {
        return Ok(Some(format!("{}: union exceeds all sequences", describe(&fam))));
    }
    let mut reversed = fam.functions().to_vec();
    reversed.reverse();
    let reversed = FunctionFamily::new(reversed, fam.universe(), fam.list_size())?;
    if union_count_paper(&reversed, cap)? != paper {
        return Ok(Some(format!(
            "{}: order of functions changes the count",
            describe(&fam)
        )));
    }
    if fam.len() > 1 {
        let fewer = FunctionFamily::new(fam.functions()[1..].to_vec(), fam.universe(), fam.list_size())?;
        if union_count_paper(&fewer, cap)? > paper {
            return Ok(Some(format!("{}: removing a function grew the count", describe(&fam))));
        }
    }
    let full = fam.with_bounds(fam.universe(), fam.universe())?;
    if union_count_paper(&full, cap)? != Count::from(1u32) {
        return Ok(Some(format!("{}: |B_(d,d)| != 1", describe(&fam))));
    }
    Ok(None)
}

fn random_lists(rng: &mut impl Rng, n: usize, k: usize, universe: usize) -> ListAssignment {
    let lists = (0..n)
        .map(|_| LabelSet::from_labels(sample(rng, universe, k).iter().map(|x| x as u32 + 1)).expect("small labels"))
        .collect();
    ListAssignment::new(lists).expect("uniform lists")
}

fn constructive(result: &mut SuiteResult, rng: &mut ChaCha8Rng, trials: usize, family: Family) {
    for n in 2..=6 {
        let labeler = match family {
            Family::Friendship => ConstructiveLabeler::friendship(n),
            _ => ConstructiveLabeler::book(n),
        };
        let labeler = match labeler {
            Ok(l) => l,
            Err(e) => return result.record(Err(e)),
        };
        let k = labeler.list_size();
        for _ in 0..trials {
            let lists = random_lists(rng, labeler.graph().order(), k, 3 * k);
            result.record(check_constructed(&labeler, family, n, &lists));
        }
    }
}

fn check_constructed(
    labeler: &ConstructiveLabeler,
    family: Family,
    n: usize,
    lists: &ListAssignment,
) -> Result<Option<String>> {
    let c = labeler.label(lists)?;
    let g = labeler.graph();
    let fail = |why: &str| Ok(Some(format!("{family}({n}) lists {:?}: {why} ({c})", lists.lists())));
    if !lists.admits(c.labels()) {
        return fail("label outside its list");
    }
    if !satisfies(Predicate::Distinguishing, g, labeler.automorphisms(), &c)? {
        return fail("not distinguishing");
    }
    let pages: BTreeSet<(u32, u32)> = match family {
        Family::Friendship => (1..=n)
            .map(|i| {
                let (x, y) = (c.get(2 * i - 1), c.get(2 * i));
                (x.min(y), x.max(y))
            })
            .collect(),
        _ => (1..=n).map(|i| (c.get(2 * i), c.get(2 * i + 1))).collect(),
    };
    if pages.len() != n {
        return fail("two pages share a label pattern");
    }
    if family == Family::Book && c.get(0) == c.get(1) {
        return fail("spine vertices share a label");
    }
    Ok(None)
}

/// The graphs on which list numbers are compared by both routes.
pub fn desk_suite() -> Vec<Graph> {
    let mut out: Vec<Graph> = [
        (Family::Complete, 2),
        (Family::Path, 3),
        (Family::Path, 4),
        (Family::Complete, 3),
        (Family::Star, 3),
        (Family::Cycle, 4),
        (Family::Cycle, 5),
        (Family::Complete, 4),
    ]
    .into_iter()
    .map(|(f, n)| generate_family(f, &[n]).expect("valid family"))
    .collect();
    out.push(paw());
    out
}

fn canonical(result: &mut SuiteResult, rng: &mut ChaCha8Rng, instances: usize) {
    // Orbit sizes of the representatives must add up to every assignment.
    for n in 1..=3usize {
        for k in 1..=2u32 {
            for m in k..=5u32 {
                let mut total = Count::default();
                let _ = CanonicalAssignments::new(n, k, m).try_for_each(|r| {
                    total += r.orbit_size(m);
                    ControlFlow::<()>::Continue(())
                });
                let expected = binomial(m as i64, k as i64).pow(n as u32);
                result.record(Ok((total != expected)
                    .then(|| format!("n={n} k={k} m={m}: orbits cover {total}, expected {expected}"))));
            }
        }
    }
    let suite = desk_suite();
    for _ in 0..instances {
        let g = suite.choose(rng).expect("non-empty suite");
        let k = rng.gen_range(1..=2usize);
        let universe = rng.gen_range(k..=g.order() * k);
        let lists = random_lists(rng, g.order(), k, universe);
        let mut renaming: Vec<u32> = (1..=universe as u32 + 3).collect();
        renaming.shuffle(rng);
        let renamed = ListAssignment::new(
            lists
                .lists()
                .iter()
                .map(|l| LabelSet::from_labels(l.iter().map(|x| renaming[x as usize - 1])).expect("small labels"))
                .collect(),
        )
        .expect("uniform lists");
        result.record(canonical_instance(g, &lists, &renamed));
    }
}

fn canonical_instance(g: &Graph, lists: &ListAssignment, renamed: &ListAssignment) -> Result<Option<String>> {
    let form = canonical_form(lists);
    if canonical_form(renamed).assignment != form.assignment {
        return Ok(Some(format!(
            "{:?} and a renaming have different canonical forms",
            lists.lists()
        )));
    }
    let aut = automorphisms(g, DEFAULT_GROUP_CAP)?;
    for pred in Predicate::ALL {
        let a = select_satisfying(pred, g, &aut, lists, DEFAULT_PRODUCT_CAP)?.is_some();
        let b = select_satisfying(pred, g, &aut, &form.assignment, DEFAULT_PRODUCT_CAP)?.is_some();
        if a != b {
            return Ok(Some(format!(
                "{pred}: {:?} and its canonical form disagree",
                lists.lists()
            )));
        }
    }
    Ok(None)
}

fn characterization(result: &mut SuiteResult) {
    for g in desk_suite() {
        let name = g.name().unwrap_or("graph").to_owned();
        for pred in [Predicate::Distinguishing, Predicate::Proper] {
            result.record(routes_agree(&g, pred).map(|r| r.map(|why| format!("{name} {pred}: {why}"))));
        }
    }
    let both = CharacterizationOptions {
        strategy: Strategy::Both,
        ..CharacterizationOptions::default()
    };
    for g in desk_suite().into_iter().filter(|g| g.order() <= 3) {
        let aut = match automorphisms(&g, DEFAULT_GROUP_CAP) {
            Ok(a) => a,
            Err(e) => return result.record(Err(e)),
        };
        for pred in Predicate::ALL {
            for d in 1..=g.order() {
                for m in d as u32..=d as u32 + 2 {
                    // Disagreement between the strategies is reported as an error.
                    result.record(characterization_holds_at(pred, &g, &aut, d, m, &both).map(|_| None));
                }
            }
        }
    }
}

fn routes_agree(g: &Graph, pred: Predicate) -> Result<Option<String>> {
    let aut = automorphisms(g, DEFAULT_GROUP_CAP)?;
    let (direct, _) = list_number_direct(pred, g, &aut, g.order(), &DirectOptions::default())?;
    let by_char = list_number_characterization(pred, g, &aut, &CharacterizationOptions::default())?;
    Ok((direct != by_char.value).then(|| format!("direct {direct}, characterization {}", by_char.value)))
}

//! Exhaustive and seeded sweeps of theorem checks, run on a bounded worker pool.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{
    evaluate, evaluate_point_set, evaluate_question, Evaluation, Facts, OpenQuestion, TheoremId, MAX_CHECK_WIDTH,
};
use crate::error::{Error, Result};
use crate::hypercube::{Components, PointSet};
use crate::network::{network_count, network_from_index, random_network_with, BooleanNetwork, MAX_ENUMERATION_WIDTH};
use crate::siggraph::{
    and_net, random_simple_digraph_with, simple_digraph_count, simple_digraph_from_index, CircularForm,
    MAX_DIGRAPH_ENUMERATION,
};

/// First line of every rendered report.
pub const REPORT_HEADER: &str = "boolnet-report v1";

const CHUNK: u64 = 512;
const KEPT_COUNTEREXAMPLES: usize = 10;
const MAX_RANDOM_ANDNET_WIDTH: usize = 6;
const MAX_CIRCULAR_WIDTH: usize = 8;
const MAX_SUBSET_WIDTH: usize = 4;

/// A stream of candidates addressed by index, so that any worker can produce any
/// candidate independently.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    /// Every network of width `n`.
    Exhaustive { n: usize },
    /// `count` uniformly random networks of width `n`.
    Sample { n: usize, count: u64, seed: u64 },
    /// The and-nets of every simple signed digraph on `n` vertices.
    AndNets { n: usize },
    /// The and-nets of `count` random simple signed digraphs on `n` vertices.
    RandomAndNets { n: usize, count: u64, seed: u64 },
    /// Every circular network on `n` components.
    Circular { n: usize },
    /// `count` random networks of width `n`, keeping the non-expansive ones.
    NonExpansiveFiltered { n: usize, count: u64, seed: u64 },
    /// Every subset of the `n`-cube.
    Subsets { n: usize },
}

/// One generated object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Candidate {
    Network(BooleanNetwork),
    Points(PointSet),
}

impl Candidate {
    /// Replayable text: `.bn` for networks, the set literal for point sets.
    pub fn payload(&self) -> String {
        match self {
            Candidate::Network(f) => f.to_bn(),
            Candidate::Points(s) => format!("points {s}\n"),
        }
    }
}

fn lehmer_order(n: usize, mut index: u64) -> Vec<usize> {
    let mut rest: Vec<usize> = (1..n).collect();
    let mut order = vec![0];
    for k in (0..rest.len()).rev() {
        let block: u64 = (1..=k as u64).product();
        let pick = (index / block) as usize;
        index %= block;
        order.push(rest.remove(pick));
    }
    order
}

fn circular_from_index(components: &Components, index: u64) -> BooleanNetwork {
    let n = components.len();
    let order = lehmer_order(n, index >> n);
    let mut predecessor = vec![0; n];
    for k in 0..n {
        predecessor[order[k]] = order[(k + n - 1) % n];
    }
    let constant = (index & ((1 << n) - 1)) as u32;
    CircularForm::new(components.clone(), predecessor, constant)
        .expect("decoded order is a cyclic permutation")
        .network()
}

fn rng_for(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

impl Generator {
    pub fn width(&self) -> usize {
        match *self {
            Generator::Exhaustive { n }
            | Generator::Sample { n, .. }
            | Generator::AndNets { n }
            | Generator::RandomAndNets { n, .. }
            | Generator::Circular { n }
            | Generator::NonExpansiveFiltered { n, .. }
            | Generator::Subsets { n } => n,
        }
    }

    fn cap(&self) -> (usize, &'static str) {
        match self {
            Generator::Exhaustive { .. } => (MAX_ENUMERATION_WIDTH, "exhaustive sweeps"),
            Generator::Sample { .. } => (MAX_CHECK_WIDTH, "sampled sweeps"),
            Generator::AndNets { .. } => (MAX_DIGRAPH_ENUMERATION, "and-net enumeration"),
            Generator::RandomAndNets { .. } => (MAX_RANDOM_ANDNET_WIDTH, "random and-nets"),
            Generator::Circular { .. } => (MAX_CIRCULAR_WIDTH, "circular family"),
            Generator::NonExpansiveFiltered { .. } => (MAX_CHECK_WIDTH, "non-expansive sampling"),
            Generator::Subsets { .. } => (MAX_SUBSET_WIDTH, "subset enumeration"),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.width();
        if n == 0 {
            return Err(Error::Usage("generator width must be at least 1".into()));
        }
        let (cap, what) = self.cap();
        if n > cap {
            return Err(Error::WidthCap { width: n, cap, what });
        }
        Ok(())
    }

    /// True when the candidates are point sets rather than networks.
    pub fn yields_point_sets(&self) -> bool {
        matches!(self, Generator::Subsets { .. })
    }

    /// Number of candidates drawn.
    pub fn len(&self) -> u64 {
        match *self {
            Generator::Exhaustive { n } => network_count(n).expect("validated width"),
            Generator::Sample { count, .. }
            | Generator::RandomAndNets { count, .. }
            | Generator::NonExpansiveFiltered { count, .. } => count,
            Generator::AndNets { n } => simple_digraph_count(n),
            Generator::Circular { n } => crate::siggraph::circular_family_size(n),
            Generator::Subsets { n } => 1u64 << (1u32 << n),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Stable name, e.g. `exhaustive-n2` or `sample-n4-count100000-seed7`.
    pub fn descriptor(&self) -> String {
        match *self {
            Generator::Exhaustive { n } => format!("exhaustive-n{n}"),
            Generator::Sample { n, count, seed } => format!("sample-n{n}-count{count}-seed{seed}"),
            Generator::AndNets { n } => format!("andnets-n{n}"),
            Generator::RandomAndNets { n, count, seed } => format!("random-andnets-n{n}-count{count}-seed{seed}"),
            Generator::Circular { n } => format!("circular-n{n}"),
            Generator::NonExpansiveFiltered { n, count, seed } => {
                format!("nonexpansive-n{n}-count{count}-seed{seed}")
            }
            Generator::Subsets { n } => format!("subsets-n{n}"),
        }
    }

    /// The candidate at `index`, or `None` when the generator's filter rejects it.
    pub fn candidate(&self, components: &Components, index: u64) -> Option<Candidate> {
        let net = match *self {
            Generator::Exhaustive { .. } => network_from_index(components, index),
            Generator::Sample { seed, .. } => random_network_with(components, &mut rng_for(seed, index)),
            Generator::AndNets { .. } => {
                and_net(&simple_digraph_from_index(components, index)).expect("enumerated digraphs are simple")
            }
            Generator::RandomAndNets { seed, .. } => {
                and_net(&random_simple_digraph_with(components, &mut rng_for(seed, index)))
                    .expect("random digraphs are simple")
            }
            Generator::Circular { .. } => circular_from_index(components, index),
            Generator::NonExpansiveFiltered { seed, .. } => {
                let f = random_network_with(components, &mut rng_for(seed, index));
                if !f.is_non_expansive() {
                    return None;
                }
                f
            }
            Generator::Subsets { .. } => return Some(Candidate::Points(PointSet::from_mask(components, index))),
        };
        Some(Candidate::Network(net))
    }
}

/// What a report is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subject {
    Theorem(TheoremId),
    Question(OpenQuestion),
}

impl Subject {
    fn kind(self) -> &'static str {
        match self {
            Subject::Theorem(_) => "theorem",
            Subject::Question(_) => "question",
        }
    }

    fn name(self) -> &'static str {
        match self {
            Subject::Theorem(t) => t.name(),
            Subject::Question(q) => q.name(),
        }
    }

    fn statement(self) -> &'static str {
        match self {
            Subject::Theorem(t) => t.statement(),
            Subject::Question(q) => q.statement(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub index: u64,
    pub payload: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct Tally {
    filtered: u64,
    vacuous: u64,
    confirmed: u64,
    counterexamples: u64,
    as_stated_failures: u64,
    examples: Vec<Counterexample>,
}

impl Tally {
    fn record(&mut self, index: u64, e: Evaluation, candidate: &Candidate) {
        match (e.hypothesis, e.conclusion) {
            (false, _) => self.vacuous += 1,
            (true, true) => self.confirmed += 1,
            (true, false) => {
                self.counterexamples += 1;
                if self.examples.len() < KEPT_COUNTEREXAMPLES {
                    self.examples.push(Counterexample {
                        index,
                        payload: candidate.payload(),
                    });
                }
            }
        }
        if e.as_stated == Some(false) {
            self.as_stated_failures += 1;
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.filtered += other.filtered;
        self.vacuous += other.vacuous;
        self.confirmed += other.confirmed;
        self.counterexamples += other.counterexamples;
        self.as_stated_failures += other.as_stated_failures;
        self.examples.extend(other.examples);
        self.examples.sort_by_key(|c| c.index);
        self.examples.truncate(KEPT_COUNTEREXAMPLES);
        self
    }
}

/// Outcome of one sweep; everything except `wall_time` is a function of the subject
/// and the generator descriptor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub subject: Subject,
    pub generator: String,
    pub candidates: u64,
    pub filtered: u64,
    pub vacuous: u64,
    pub confirmed: u64,
    pub counterexamples: u64,
    /// Failures of the weaker as-stated conclusion, where the statement has one.
    pub as_stated_failures: Option<u64>,
    /// The first few counterexamples by candidate index.
    pub examples: Vec<Counterexample>,
    pub wall_time: Duration,
}

impl SweepReport {
    /// Open-question hits; always zero for theorems.
    pub fn discoveries(&self) -> u64 {
        match self.subject {
            Subject::Question(_) => self.counterexamples,
            Subject::Theorem(_) => 0,
        }
    }

    /// No theorem counterexample. Open-question discoveries never fail a sweep.
    pub fn passed(&self) -> bool {
        matches!(self.subject, Subject::Question(_)) || self.counterexamples == 0
    }

    fn outcome(&self) -> &'static str {
        match self.subject {
            Subject::Theorem(_) if self.counterexamples == 0 => "PASS",
            Subject::Theorem(_) => "FAIL",
            Subject::Question(_) if self.counterexamples == 0 => "NO-DISCOVERY",
            Subject::Question(_) => "DISCOVERY",
        }
    }

    pub fn key_values(&self) -> BTreeMap<&'static str, String> {
        let mut kv = BTreeMap::new();
        kv.insert("kind", self.subject.kind().to_string());
        kv.insert("id", self.subject.name().to_string());
        kv.insert("generator", self.generator.clone());
        kv.insert("candidates", self.candidates.to_string());
        kv.insert("filtered", self.filtered.to_string());
        kv.insert("vacuous", self.vacuous.to_string());
        kv.insert("confirmed", self.confirmed.to_string());
        match self.subject {
            Subject::Theorem(_) => kv.insert("counterexamples", self.counterexamples.to_string()),
            Subject::Question(_) => kv.insert("discoveries", self.counterexamples.to_string()),
        };
        if let Some(n) = self.as_stated_failures {
            kv.insert("as_stated_counterexamples", n.to_string());
        }
        kv.insert("outcome", self.outcome().to_string());
        kv
    }

    /// The report without the wall-time line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let hit = match self.subject {
            Subject::Theorem(_) => "counterexample",
            Subject::Question(_) => "discovery",
        };
        writeln!(out, "{REPORT_HEADER}").unwrap();
        writeln!(
            out,
            "{} {}: {}",
            self.subject.kind(),
            self.subject.name(),
            self.subject.statement()
        )
        .unwrap();
        writeln!(out, "generator: {}", self.generator).unwrap();
        writeln!(
            out,
            "candidates: {} (filtered {}, vacuous {}, confirmed {}, {hit} {})",
            self.candidates, self.filtered, self.vacuous, self.confirmed, self.counterexamples
        )
        .unwrap();
        if let Some(n) = self.as_stated_failures {
            writeln!(out, "as-stated weaker conclusion: {n} counterexamples").unwrap();
        }
        for c in &self.examples {
            writeln!(out, "{hit} at index {}:", c.index).unwrap();
            for line in c.payload.lines() {
                writeln!(out, "  {line}").unwrap();
            }
        }
        writeln!(out, "{}", self.outcome()).unwrap();
        writeln!(out).unwrap();
        for (k, v) in self.key_values() {
            writeln!(out, "{k}={v}").unwrap();
        }
        out
    }

    /// [`render`](Self::render) followed by `wall_time_ms=`.
    pub fn render_timed(&self) -> String {
        format!("{}wall_time_ms={}\n", self.render(), self.wall_time.as_millis())
    }
}

fn run<F>(subjects: &[Subject], gen: &Generator, jobs: usize, eval: F) -> Result<Vec<SweepReport>>
where
    F: Fn(&Candidate, &mut dyn FnMut(usize, Evaluation)) + Sync,
{
    gen.validate()?;
    let start = Instant::now();
    let components = Components::range(gen.width())?;
    let total = gen.len();
    let chunks = total.div_ceil(CHUNK);
    let chunk_tally = |c: u64| {
        let mut tallies = vec![Tally::default(); subjects.len()];
        for index in c * CHUNK..((c + 1) * CHUNK).min(total) {
            match gen.candidate(&components, index) {
                None => tallies.iter_mut().for_each(|t| t.filtered += 1),
                Some(candidate) => eval(&candidate, &mut |k, e| tallies[k].record(index, e, &candidate)),
            }
        }
        tallies
    };
    let merge = |a: Vec<Tally>, b: Vec<Tally>| a.into_iter().zip(b).map(|(x, y)| x.merge(y)).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Usage(format!("cannot start worker pool: {e}")))?;
    let tallies: Vec<Tally> = pool.install(|| {
        (0..chunks)
            .into_par_iter()
            .map(chunk_tally)
            .reduce(|| vec![Tally::default(); subjects.len()], merge)
    });
    let wall_time = start.elapsed();
    Ok(subjects
        .iter()
        .zip(tallies)
        .map(|(&subject, t)| SweepReport {
            subject,
            generator: gen.descriptor(),
            candidates: total,
            filtered: t.filtered,
            vacuous: t.vacuous,
            confirmed: t.confirmed,
            counterexamples: t.counterexamples,
            as_stated_failures: (subject == Subject::Theorem(TheoremId::DichotomyUnique))
                .then_some(t.as_stated_failures),
            examples: t.examples,
            wall_time,
        })
        .collect())
}

/// Sweeps several theorems over one candidate stream, sharing per-candidate work.
///
/// `jobs = 0` uses one worker per available core.
pub fn sweep_many(ids: &[TheoremId], gen: &Generator, jobs: usize) -> Result<Vec<SweepReport>> {
    for &id in ids {
        if id.is_point_set() != gen.yields_point_sets() {
            return Err(Error::Usage(format!(
                "{id} cannot be checked on generator {}",
                gen.descriptor()
            )));
        }
    }
    let subjects: Vec<Subject> = ids.iter().map(|&t| Subject::Theorem(t)).collect();
    run(&subjects, gen, jobs, |candidate, record| match candidate {
        Candidate::Network(f) => {
            let facts = Facts::new(f);
            for (k, &id) in ids.iter().enumerate() {
                record(k, evaluate(id, &facts).expect("generator width within check cap"));
            }
        }
        Candidate::Points(s) => {
            for (k, &id) in ids.iter().enumerate() {
                record(k, evaluate_point_set(id, s).expect("point-set statement"));
            }
        }
    })
}

pub fn sweep(id: TheoremId, gen: &Generator, jobs: usize) -> Result<SweepReport> {
    Ok(sweep_many(&[id], gen, jobs)?.remove(0))
}

/// Searches `gen` for a network meeting the question's hypothesis but not its conclusion.
pub fn open_question_search(q: OpenQuestion, gen: &Generator, jobs: usize) -> Result<SweepReport> {
    if gen.yields_point_sets() {
        return Err(Error::Usage(format!("{q} needs a network generator")));
    }
    let reports = run(&[Subject::Question(q)], gen, jobs, |candidate, record| {
        if let Candidate::Network(f) = candidate {
            record(
                0,
                evaluate_question(q, &Facts::new(f)).expect("generator width within check cap"),
            );
        }
    })?;
    Ok(reports.into_iter().next().expect("one subject"))
}

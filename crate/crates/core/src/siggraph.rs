//! Signed digraphs, local and global interaction graphs, cycles, circular
//! networks and and-nets.

use std::fmt;
use std::ops::ControlFlow;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypercube::{bits, full_mask, ComponentSet, Components, Label, Point};
use crate::network::BooleanNetwork;

/// Largest vertex count for exhaustive enumeration of simple signed digraphs.
pub const MAX_DIGRAPH_ENUMERATION: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    pub fn from_negative_count(count: usize) -> Sign {
        if count.is_multiple_of(2) {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }

    pub fn from_symbol(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Positive),
            '-' => Some(Sign::Negative),
            _ => None,
        }
    }

    /// `+1` or `-1`.
    pub fn value(self) -> i8 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Positive => f.write_str("positive"),
            Sign::Negative => f.write_str("negative"),
        }
    }
}

/// A signed arc `source → target` given by component indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedArc {
    pub source: usize,
    pub sign: Sign,
    pub target: usize,
}

/// A signed digraph on a component list, stored as positive and negative out-masks.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedDigraph {
    components: Components,
    pos: Vec<u32>,
    neg: Vec<u32>,
}

impl SignedDigraph {
    pub fn empty(components: Components) -> Self {
        let n = components.len();
        SignedDigraph {
            components,
            pos: vec![0; n],
            neg: vec![0; n],
        }
    }

    pub(crate) fn from_masks(components: Components, pos: Vec<u32>, neg: Vec<u32>) -> Self {
        SignedDigraph { components, pos, neg }
    }

    pub fn from_arcs(components: Components, arcs: impl IntoIterator<Item = SignedArc>) -> Result<Self> {
        let mut g = Self::empty(components);
        for a in arcs {
            g.add_arc(a.source, a.sign, a.target)?;
        }
        Ok(g)
    }

    pub fn components(&self) -> &Components {
        &self.components
    }

    pub fn vertex_count(&self) -> usize {
        self.components.len()
    }

    /// Adds an arc; adding an existing signed arc is a no-op.
    pub fn add_arc(&mut self, source: usize, sign: Sign, target: usize) -> Result<()> {
        let n = self.vertex_count();
        if source >= n || target >= n {
            return Err(Error::InvalidSpec(format!(
                "arc {source}->{target} outside {n} vertices"
            )));
        }
        match sign {
            Sign::Positive => self.pos[source] |= 1 << target,
            Sign::Negative => self.neg[source] |= 1 << target,
        }
        Ok(())
    }

    pub fn add_arc_labels(&mut self, source: &str, sign: Sign, target: &str) -> Result<()> {
        let s = self.components.index_of(source)?;
        let t = self.components.index_of(target)?;
        self.add_arc(s, sign, t)
    }

    #[inline]
    pub fn has_arc(&self, source: usize, sign: Sign, target: usize) -> bool {
        let m = match sign {
            Sign::Positive => self.pos[source],
            Sign::Negative => self.neg[source],
        };
        m >> target & 1 == 1
    }

    /// Targets of positive arcs leaving `source`.
    #[inline]
    pub fn positive_out(&self, source: usize) -> u32 {
        self.pos[source]
    }

    #[inline]
    pub fn negative_out(&self, source: usize) -> u32 {
        self.neg[source]
    }

    /// Targets of arcs of either sign leaving `source`, i.e. the out-set in `|G|`.
    #[inline]
    pub fn out_mask(&self, source: usize) -> u32 {
        self.pos[source] | self.neg[source]
    }

    pub fn in_masks(&self) -> (Vec<u32>, Vec<u32>) {
        let n = self.vertex_count();
        let mut pin = vec![0u32; n];
        let mut nin = vec![0u32; n];
        for j in 0..n {
            for i in bits(self.pos[j]) {
                pin[i] |= 1 << j;
            }
            for i in bits(self.neg[j]) {
                nin[i] |= 1 << j;
            }
        }
        (pin, nin)
    }

    /// Arcs ordered by source, then target, then sign.
    pub fn arcs(&self) -> Vec<SignedArc> {
        let mut out = Vec::new();
        for source in 0..self.vertex_count() {
            for target in bits(self.out_mask(source)) {
                for sign in [Sign::Positive, Sign::Negative] {
                    if self.has_arc(source, sign, target) {
                        out.push(SignedArc { source, sign, target });
                    }
                }
            }
        }
        out
    }

    pub fn arc_count(&self) -> usize {
        self.pos.iter().chain(&self.neg).map(|m| m.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.pos.iter().chain(&self.neg).all(|&m| m == 0)
    }

    /// At most one arc per ordered pair.
    pub fn is_simple(&self) -> bool {
        self.pos.iter().zip(&self.neg).all(|(p, n)| p & n == 0)
    }

    pub fn is_subgraph_of(&self, other: &SignedDigraph) -> bool {
        self.components == other.components
            && (0..self.vertex_count()).all(|j| self.pos[j] & !other.pos[j] == 0 && self.neg[j] & !other.neg[j] == 0)
    }

    pub fn union_with(&mut self, other: &SignedDigraph) -> Result<()> {
        self.components.ensure_same(&other.components)?;
        for j in 0..self.vertex_count() {
            self.pos[j] |= other.pos[j];
            self.neg[j] |= other.neg[j];
        }
        Ok(())
    }

    /// The subgraph induced by the vertices in `mask`, relabelled onto those components.
    pub fn induced_subgraph(&self, mask: u32) -> Result<SignedDigraph> {
        let components = self.components.select(mask)?;
        let squeeze = |m: u32| crate::hypercube::compress(m & mask, mask);
        let (pos, neg) = bits(mask).map(|j| (squeeze(self.pos[j]), squeeze(self.neg[j]))).unzip();
        Ok(SignedDigraph { components, pos, neg })
    }

    /// Maximum in-degree of the unsigned graph `|G|`.
    pub fn max_in_degree(&self) -> u32 {
        let (pin, nin) = self.in_masks();
        pin.iter()
            .zip(&nin)
            .map(|(p, n)| (p | n).count_ones())
            .max()
            .unwrap_or(0)
    }

    /// Vertices reachable from `start` in `|G|` (including `start`) within `allowed`.
    fn reach(&self, start: usize, allowed: u32, forward: bool) -> u32 {
        let adj: Vec<u32> = if forward {
            (0..self.vertex_count()).map(|j| self.out_mask(j)).collect()
        } else {
            let (pin, nin) = self.in_masks();
            pin.iter().zip(&nin).map(|(p, n)| p | n).collect()
        };
        let mut seen = 1u32 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= adj[v];
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// `|G|` is strongly connected and has at least one arc.
    pub fn is_strongly_connected(&self) -> bool {
        let all = full_mask(self.vertex_count());
        !self.is_empty() && self.reach(0, all, true) == all && self.reach(0, all, false) == all
    }

    /// True when `|G|` has no directed cycle (loops count as cycles).
    pub fn is_acyclic(&self) -> bool {
        let n = self.vertex_count();
        let mut remaining = full_mask(n);
        loop {
            // peel vertices with no out-arc into the remaining set
            let sinks = bits(remaining)
                .filter(|&v| self.out_mask(v) & remaining == 0)
                .fold(0u32, |m, v| m | 1 << v);
            if sinks == 0 {
                return remaining == 0;
            }
            remaining &= !sinks;
        }
    }

    /// True when some cycle has an odd number of negative arcs.
    ///
    /// A closed walk with an odd number of negative arcs always contains a
    /// negative simple cycle, so parity-doubled reachability suffices.
    pub fn has_negative_cycle(&self) -> bool {
        let n = self.vertex_count();
        for v in 0..n {
            // (even, odd) parity reach sets from v
            let mut even = 1u32 << v;
            let mut odd = 0u32;
            let mut fe = even;
            let mut fo = 0u32;
            while fe != 0 || fo != 0 {
                let (mut ne, mut no) = (0u32, 0u32);
                for u in bits(fe) {
                    ne |= self.pos[u];
                    no |= self.neg[u];
                }
                for u in bits(fo) {
                    no |= self.pos[u];
                    ne |= self.neg[u];
                }
                if no >> v & 1 == 1 {
                    return true;
                }
                fe = ne & !even;
                fo = no & !odd;
                even |= ne;
                odd |= no;
            }
        }
        false
    }

    pub fn has_positive_cycle(&self) -> bool {
        self.for_each_cycle(|_, signs| {
            if signs.iter().filter(|s| s.is_negative()).count() % 2 == 0 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })
        .is_break()
    }

    /// Visits every signed cycle once as `(vertices, signs)`, where `signs[k]` is the
    /// sign of the arc leaving `vertices[k]`. Vertices start at their smallest index.
    ///
    /// Unsigned circuits come from Johnson's algorithm on `|G|`; each circuit is
    /// then expanded over the available signs of its arcs.
    pub fn for_each_cycle<F>(&self, mut visit: F) -> ControlFlow<()>
    where
        F: FnMut(&[usize], &[Sign]) -> ControlFlow<()>,
    {
        let n = self.vertex_count();
        let adj: Vec<u32> = (0..n).map(|j| self.out_mask(j)).collect();
        let mut signs = Vec::with_capacity(n);
        let mut emit = |circuit: &[usize]| self.expand_signs(circuit, &mut signs, &mut visit);
        for s in 0..n {
            let allowed = full_mask(n) & !((1u32 << s) - 1);
            let component = self.reach(s, allowed, true) & self.reach(s, allowed, false);
            if component == 1 << s && adj[s] >> s & 1 == 0 {
                continue;
            }
            let mut johnson = Johnson {
                adj: &adj,
                allowed: component,
                start: s,
                blocked: 0,
                block_map: vec![0; n],
                stack: Vec::with_capacity(n),
            };
            johnson.circuit(s, &mut emit)?;
        }
        ControlFlow::Continue(())
    }

    fn expand_signs<F>(&self, circuit: &[usize], signs: &mut Vec<Sign>, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize], &[Sign]) -> ControlFlow<()>,
    {
        let k = signs.len();
        if k == circuit.len() {
            return visit(circuit, signs);
        }
        let (a, b) = (circuit[k], circuit[(k + 1) % circuit.len()]);
        for sign in [Sign::Positive, Sign::Negative] {
            if self.has_arc(a, sign, b) {
                signs.push(sign);
                let flow = self.expand_signs(circuit, signs, visit);
                signs.pop();
                flow?;
            }
        }
        ControlFlow::Continue(())
    }

    /// All signed cycles, sorted by length, then vertices, then signs.
    pub fn cycles(&self) -> Vec<Cycle> {
        let mut out = Vec::new();
        let _ = self.for_each_cycle(|vs, ss| {
            out.push(Cycle {
                components: self.components.clone(),
                vertices: vs.to_vec(),
                signs: ss.to_vec(),
            });
            ControlFlow::Continue(())
        });
        out.sort();
        out
    }

    /// True when every arc of `cycle` is an arc of this graph.
    pub fn contains_cycle(&self, cycle: &Cycle) -> bool {
        self.components == cycle.components && cycle.arcs().all(|a| self.has_arc(a.source, a.sign, a.target))
    }

    /// Arcs of `|G|` between vertices of `cycle` that are not arcs of `|C|`, as `(source, target)`.
    pub fn chords(&self, cycle: &Cycle) -> Result<Vec<(usize, usize)>> {
        if !self.contains_cycle(cycle) {
            return Err(Error::CycleNotInGraph);
        }
        let m = cycle.vertex_mask();
        let mut out = Vec::new();
        for (k, &v) in cycle.vertices.iter().enumerate() {
            let next = cycle.vertices[(k + 1) % cycle.len()];
            for w in bits(self.out_mask(v) & m & !(1 << next)) {
                out.push((v, w));
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// `|C|` is an induced subgraph of `|G|`.
    pub fn is_chordless(&self, cycle: &Cycle) -> Result<bool> {
        Ok(self.chords(cycle)?.is_empty())
    }

    /// Vertices with a positive arc to one vertex of `cycle` and a negative arc to another,
    /// not counting the arcs of `cycle` itself (so for a vertex on the cycle both arcs are chords).
    pub fn delocalizing_vertices(&self, cycle: &Cycle) -> Result<ComponentSet> {
        if !self.contains_cycle(cycle) {
            return Err(Error::CycleNotInGraph);
        }
        let m = cycle.vertex_mask();
        let mut pos: Vec<u32> = self.pos.iter().map(|p| p & m).collect();
        let mut neg: Vec<u32> = self.neg.iter().map(|q| q & m).collect();
        for a in cycle.arcs() {
            match a.sign {
                Sign::Positive => pos[a.source] &= !(1 << a.target),
                Sign::Negative => neg[a.source] &= !(1 << a.target),
            }
        }
        let mask = (0..self.vertex_count())
            .filter(|&v| delocalizes(pos[v], neg[v]))
            .fold(0u32, |acc, v| acc | 1 << v);
        self.components.set_from_mask(mask)
    }

    /// Parses `.sg` text: `vertices <label>…` then one `<src> <+|-> <dst>` line per arc.
    pub fn parse_sg(text: &str) -> Result<SignedDigraph> {
        let mut graph: Option<SignedDigraph> = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line_no = lineno + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let words: Vec<&str> = line.split_whitespace().collect();
            match &mut graph {
                None => {
                    if words.first() != Some(&"vertices") {
                        return Err(Error::parse(line_no, "expected `vertices <label> …` header"));
                    }
                    let mut labels = words[1..]
                        .iter()
                        .map(|w| Label::new(w))
                        .collect::<Result<Vec<_>>>()
                        .map_err(|e| Error::parse(line_no, e.to_string()))?;
                    labels.sort();
                    let comps = Components::from_labels(labels).map_err(|e| match e {
                        Error::WidthCap { .. } => e,
                        other => Error::parse(line_no, other.to_string()),
                    })?;
                    graph = Some(SignedDigraph::empty(comps));
                }
                Some(g) => {
                    let [src, sign, dst] = words[..] else {
                        return Err(Error::parse(line_no, "expected `<src> <+|-> <dst>`"));
                    };
                    let sign = match sign {
                        "+" => Sign::Positive,
                        "-" => Sign::Negative,
                        other => return Err(Error::parse(line_no, format!("bad sign `{other}`"))),
                    };
                    let s = g
                        .components
                        .index_of(src)
                        .map_err(|e| Error::parse(line_no, e.to_string()))?;
                    let t = g
                        .components
                        .index_of(dst)
                        .map_err(|e| Error::parse(line_no, e.to_string()))?;
                    if g.has_arc(s, sign, t) {
                        return Err(Error::parse(line_no, format!("duplicate arc `{line}`")));
                    }
                    g.add_arc(s, sign, t)?;
                }
            }
        }
        graph.ok_or_else(|| Error::parse(0, "missing `vertices` header"))
    }

    pub fn to_sg(&self) -> String {
        let mut out = format!("vertices {}\n", self.components);
        for a in self.arcs() {
            out.push_str(&format!(
                "{} {} {}\n",
                self.components.label(a.source),
                a.sign.symbol(),
                self.components.label(a.target)
            ));
        }
        out
    }
}

fn delocalizes(pos: u32, neg: u32) -> bool {
    pos != 0 && neg != 0 && !(pos == neg && pos.count_ones() == 1)
}

impl fmt::Debug for SignedDigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedDigraph[{}](", self.components)?;
        for (k, a) in self.arcs().iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(
                f,
                "{}{}{}",
                self.components.label(a.source),
                a.sign.symbol(),
                self.components.label(a.target)
            )?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for SignedDigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_sg())
    }
}

struct Johnson<'a> {
    adj: &'a [u32],
    allowed: u32,
    start: usize,
    blocked: u32,
    block_map: Vec<u32>,
    stack: Vec<usize>,
}

impl Johnson<'_> {
    fn circuit<F>(&mut self, v: usize, emit: &mut F) -> ControlFlow<(), bool>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let mut found = false;
        self.stack.push(v);
        self.blocked |= 1 << v;
        let succ = self.adj[v] & self.allowed;
        for w in bits(succ) {
            if w == self.start {
                if emit(&self.stack).is_break() {
                    return ControlFlow::Break(());
                }
                found = true;
            } else if self.blocked >> w & 1 == 0 && self.circuit(w, emit)? {
                found = true;
            }
        }
        if found {
            self.unblock(v);
        } else {
            for w in bits(succ) {
                self.block_map[w] |= 1 << v;
            }
        }
        self.stack.pop();
        ControlFlow::Continue(found)
    }

    fn unblock(&mut self, u: usize) {
        self.blocked &= !(1 << u);
        let waiting = std::mem::take(&mut self.block_map[u]);
        for w in bits(waiting) {
            if self.blocked >> w & 1 == 1 {
                self.unblock(w);
            }
        }
    }
}

/// A signed elementary cycle, rotated so that its smallest vertex comes first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cycle {
    components: Components,
    vertices: Vec<usize>,
    signs: Vec<Sign>,
}

impl Cycle {
    /// Builds a cycle from vertex indices in traversal order and the signs of the arcs
    /// leaving each of them.
    pub fn new(components: &Components, vertices: Vec<usize>, signs: Vec<Sign>) -> Result<Self> {
        let n = components.len();
        if vertices.is_empty() || vertices.len() != signs.len() {
            return Err(Error::InvalidSpec("cycle needs one sign per vertex".into()));
        }
        let mut seen = 0u32;
        for &v in &vertices {
            if v >= n || seen >> v & 1 == 1 {
                return Err(Error::InvalidSpec("cycle vertices must be distinct components".into()));
            }
            seen |= 1 << v;
        }
        let lead = vertices
            .iter()
            .enumerate()
            .min_by_key(|(_, &v)| v)
            .map(|(k, _)| k)
            .unwrap_or(0);
        let mut vertices = vertices;
        let mut signs = signs;
        vertices.rotate_left(lead);
        signs.rotate_left(lead);
        Ok(Cycle {
            components: components.clone(),
            vertices,
            signs,
        })
    }

    /// Builds a cycle from labels, e.g. `["1", "2"]` with signs `[+, -]`.
    pub fn from_labels<S: AsRef<str>>(components: &Components, labels: &[S], signs: &[Sign]) -> Result<Self> {
        let vertices = labels
            .iter()
            .map(|l| components.index_of(l.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(components, vertices, signs.to_vec())
    }

    pub fn components(&self) -> &Components {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn vertex_mask(&self) -> u32 {
        self.vertices.iter().fold(0, |m, &v| m | 1 << v)
    }

    pub fn negative_arc_count(&self) -> usize {
        self.signs.iter().filter(|s| s.is_negative()).count()
    }

    pub fn sign(&self) -> Sign {
        Sign::from_negative_count(self.negative_arc_count())
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Sign::Positive
    }

    pub fn arcs(&self) -> impl Iterator<Item = SignedArc> + '_ {
        let k = self.len();
        (0..k).map(move |i| SignedArc {
            source: self.vertices[i],
            sign: self.signs[i],
            target: self.vertices[(i + 1) % k],
        })
    }

    /// The cycle as a signed digraph on the full component list.
    pub fn to_digraph(&self) -> SignedDigraph {
        SignedDigraph::from_arcs(self.components.clone(), self.arcs()).expect("indices validated")
    }
}

impl PartialOrd for Cycle {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cycle {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.len(), &self.vertices, &self.signs).cmp(&(other.len(), &other.vertices, &other.signs))
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, s) in self.vertices.iter().zip(&self.signs) {
            write!(f, "{} {} ", self.components.label(*v), s.symbol())?;
        }
        write!(f, "{}", self.components.label(self.vertices[0]))
    }
}

impl fmt::Debug for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cycle({self})")
    }
}

/// `f_ij(x) = f_i(x with x_j=1) − f_i(x with x_j=0)`, by component index.
pub fn discrete_derivative(f: &BooleanNetwork, i: usize, j: usize, x: u32) -> i8 {
    let hi = f.eval(x | 1 << j) >> i & 1;
    let lo = f.eval(x & !(1 << j)) >> i & 1;
    hi as i8 - lo as i8
}

/// Positive and negative out-masks of `Gf(x)`.
#[inline]
pub(crate) fn local_masks(f: &BooleanNetwork, x: u32, pos: &mut [u32], neg: &mut [u32]) {
    let n = f.width();
    let full = full_mask(n);
    for j in 0..n {
        let hi = f.eval(x | 1 << j);
        let lo = f.eval(x & !(1 << j));
        pos[j] = hi & !lo & full;
        neg[j] = !hi & lo & full;
    }
}

/// `Gf(x)`: arc `j → i` with sign `f_ij(x)` whenever it is non-zero.
pub fn local_interaction_graph(f: &BooleanNetwork, x: &Point) -> Result<SignedDigraph> {
    f.components().ensure_same(x.components())?;
    Ok(local_interaction_graph_code(f, x.code()))
}

pub fn local_interaction_graph_code(f: &BooleanNetwork, x: u32) -> SignedDigraph {
    let n = f.width();
    let mut pos = vec![0; n];
    let mut neg = vec![0; n];
    local_masks(f, x, &mut pos, &mut neg);
    SignedDigraph::from_masks(f.components().clone(), pos, neg)
}

/// `G(f)`, the union of all local interaction graphs.
pub fn global_interaction_graph(f: &BooleanNetwork) -> SignedDigraph {
    let n = f.width();
    let mut pos = vec![0; n];
    let mut neg = vec![0; n];
    let full = full_mask(n);
    for x in 0..1u32 << n {
        let lo = f.eval(x);
        for j in 0..n {
            if x >> j & 1 == 1 {
                continue;
            }
            let hi = f.eval(x | 1 << j);
            pos[j] |= hi & !lo & full;
            neg[j] |= !hi & lo & full;
        }
    }
    SignedDigraph::from_masks(f.components().clone(), pos, neg)
}

/// `f(x) = σx ⊕ s` with `σ` a cyclic permutation given by predecessors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CircularForm {
    components: Components,
    predecessor: Vec<usize>,
    constant: u32,
}

impl CircularForm {
    /// `predecessor[i]` is the unique in-neighbour of `i`; bit `i` of `constant` is set
    /// when the arc into `i` is negative.
    pub fn new(components: Components, predecessor: Vec<usize>, constant: u32) -> Result<Self> {
        let n = components.len();
        if predecessor.len() != n {
            return Err(Error::InvalidCircularForm(format!(
                "expected {n} predecessors, got {}",
                predecessor.len()
            )));
        }
        if constant & !full_mask(n) != 0 {
            return Err(Error::InvalidCircularForm(
                "constant wider than the component list".into(),
            ));
        }
        let mut v = 0;
        let mut seen = 0u32;
        for _ in 0..n {
            if predecessor[v] >= n || seen >> v & 1 == 1 {
                return Err(Error::InvalidCircularForm("permutation is not a single cycle".into()));
            }
            seen |= 1 << v;
            v = predecessor[v];
        }
        if v != 0 || seen != full_mask(n) {
            return Err(Error::InvalidCircularForm("permutation is not a single cycle".into()));
        }
        Ok(CircularForm {
            components,
            predecessor,
            constant,
        })
    }

    /// The cycle visiting `order[0] → order[1] → … → order[0]`; `signs[k]` is the sign of
    /// the arc entering `order[k]`.
    pub fn from_order(components: Components, order: &[usize], signs: &[Sign]) -> Result<Self> {
        let n = components.len();
        if order.len() != n || signs.len() != n {
            return Err(Error::InvalidCircularForm(format!(
                "expected {n} vertices and {n} signs"
            )));
        }
        let mut predecessor = vec![usize::MAX; n];
        let mut constant = 0;
        for k in 0..n {
            let v = order[k];
            if v >= n {
                return Err(Error::InvalidCircularForm(format!("vertex index {v} out of range")));
            }
            predecessor[v] = order[(k + n - 1) % n];
            if signs[k].is_negative() {
                constant |= 1 << v;
            }
        }
        Self::new(components, predecessor, constant)
    }

    /// The cycle `1 → 2 → … → n → 1` on components `1..=n`, with `signs` given as a
    /// string of `+`/`-` where the `k`-th symbol is the sign of the arc into component `k`.
    pub fn standard(n: usize, signs: &str) -> Result<Self> {
        let parsed: Vec<Sign> = signs
            .chars()
            .map(|c| Sign::from_symbol(c).ok_or_else(|| Error::InvalidCircularForm(format!("bad sign `{c}`"))))
            .collect::<Result<_>>()?;
        if parsed.len() != n {
            return Err(Error::InvalidCircularForm(format!(
                "expected {n} signs, got {}",
                parsed.len()
            )));
        }
        let order: Vec<usize> = (0..n).collect();
        Self::from_order(Components::range(n)?, &order, &parsed)
    }

    pub fn components(&self) -> &Components {
        &self.components
    }

    pub fn predecessors(&self) -> &[usize] {
        &self.predecessor
    }

    pub fn constant(&self) -> Point {
        self.components.point(self.constant)
    }

    pub fn sign(&self) -> Sign {
        Sign::from_negative_count(self.constant.count_ones() as usize)
    }

    pub fn network(&self) -> BooleanNetwork {
        let pred = &self.predecessor;
        let s = self.constant;
        BooleanNetwork::from_fn(self.components.clone(), |x| {
            let mut y = 0;
            for (i, &p) in pred.iter().enumerate() {
                y |= (x >> p & 1) << i;
            }
            y ^ s
        })
    }

    /// The signed cycle `G(f)` of the induced network.
    pub fn cycle(&self) -> Cycle {
        let n = self.components.len();
        let mut succ = vec![0; n];
        for (i, &p) in self.predecessor.iter().enumerate() {
            succ[p] = i;
        }
        let mut vertices = Vec::with_capacity(n);
        let mut signs = Vec::with_capacity(n);
        let mut v = 0;
        for _ in 0..n {
            vertices.push(v);
            let next = succ[v];
            signs.push(if self.constant >> next & 1 == 1 {
                Sign::Negative
            } else {
                Sign::Positive
            });
            v = next;
        }
        Cycle::new(&self.components, vertices, signs).expect("single cycle validated")
    }
}

impl fmt::Debug for CircularForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CircularForm({})", self.cycle())
    }
}

impl fmt::Display for CircularForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle())
    }
}

pub fn circular_network(form: &CircularForm) -> BooleanNetwork {
    form.network()
}

/// The circular form of `f`, if `G(f)` is a single cycle through every vertex and `f`
/// is the induced circular network.
pub fn detect_circular(f: &BooleanNetwork) -> Option<(CircularForm, Sign)> {
    let g = global_interaction_graph(f);
    if !g.is_simple() {
        return None;
    }
    let (pin, nin) = g.in_masks();
    let n = f.width();
    let mut predecessor = Vec::with_capacity(n);
    let mut constant = 0;
    for i in 0..n {
        let all = pin[i] | nin[i];
        if all.count_ones() != 1 {
            return None;
        }
        predecessor.push(all.trailing_zeros() as usize);
        if nin[i] != 0 {
            constant |= 1 << i;
        }
    }
    let form = CircularForm::new(f.components().clone(), predecessor, constant).ok()?;
    if form.network() != *f {
        return None;
    }
    let sign = form.sign();
    Some((form, sign))
}

/// Number of circular networks on `n` labelled components: `(n−1)!·2^n`.
pub fn circular_family_size(n: usize) -> u64 {
    (1..n as u64).product::<u64>() * (1u64 << n)
}

/// Every circular form on components `1..=n`: all cyclic orders starting at the first
/// component, times all constants.
pub fn circular_family(n: usize) -> Result<impl Iterator<Item = CircularForm>> {
    use itertools::Itertools;
    const CAP: usize = 8;
    if n == 0 || n > CAP {
        return Err(Error::WidthCap {
            width: n,
            cap: CAP,
            what: "circular family",
        });
    }
    let components = Components::range(n)?;
    let orders: Vec<Vec<usize>> = (1..n)
        .permutations(n - 1)
        .map(|rest| std::iter::once(0).chain(rest).collect())
        .collect();
    Ok(orders.into_iter().flat_map(move |order| {
        let components = components.clone();
        (0..1u32 << n).map(move |s| {
            let mut predecessor = vec![0; n];
            for k in 0..n {
                predecessor[order[k]] = order[(k + n - 1) % n];
            }
            CircularForm::new(components.clone(), predecessor, s).expect("valid cycle")
        })
    }))
}

/// The and-net of a simple signed digraph: `f_i(x) = 1` iff every positive in-neighbour
/// is 1 and every negative in-neighbour is 0.
pub fn and_net(g: &SignedDigraph) -> Result<BooleanNetwork> {
    if let Some(j) = (0..g.vertex_count()).find(|&j| g.pos[j] & g.neg[j] != 0) {
        let i = (g.pos[j] & g.neg[j]).trailing_zeros() as usize;
        return Err(Error::NotSimple {
            source_label: g.components.label(j).to_string(),
            target_label: g.components.label(i).to_string(),
        });
    }
    let (pin, nin) = g.in_masks();
    Ok(BooleanNetwork::from_fn(g.components.clone(), |x| {
        let mut y = 0;
        for i in 0..pin.len() {
            if x & pin[i] == pin[i] && x & nin[i] == 0 {
                y |= 1 << i;
            }
        }
        y
    }))
}

/// `G(f)` is simple and `f` is the and-net of `G(f)`.
pub fn is_and_net(f: &BooleanNetwork) -> bool {
    let g = global_interaction_graph(f);
    g.is_simple() && and_net(&g).is_ok_and(|h| h == *f)
}

/// Number of simple signed digraphs on `n` labelled vertices, `3^(n²)`.
pub fn simple_digraph_count(n: usize) -> u64 {
    3u64.pow((n * n) as u32)
}

/// The simple signed digraph with enumeration index `index`: base-3 digit `j·n + i`
/// is 0 (no arc), 1 (positive) or 2 (negative) for the arc `j → i`.
pub fn simple_digraph_from_index(components: &Components, mut index: u64) -> SignedDigraph {
    let n = components.len();
    let mut g = SignedDigraph::empty(components.clone());
    for j in 0..n {
        for i in 0..n {
            match index % 3 {
                1 => g.pos[j] |= 1 << i,
                2 => g.neg[j] |= 1 << i,
                _ => {}
            }
            index /= 3;
        }
    }
    g
}

pub fn enumerate_simple_digraphs(components: &Components) -> Result<impl Iterator<Item = SignedDigraph> + '_> {
    let n = components.len();
    if n > MAX_DIGRAPH_ENUMERATION {
        return Err(Error::WidthCap {
            width: n,
            cap: MAX_DIGRAPH_ENUMERATION,
            what: "simple digraph enumeration",
        });
    }
    Ok((0..simple_digraph_count(n)).map(move |k| simple_digraph_from_index(components, k)))
}

/// A uniformly random simple signed digraph on `1..=n`, reproducible from `seed`.
pub fn random_simple_digraph(n: usize, seed: u64) -> Result<SignedDigraph> {
    let components = Components::range(n)?;
    Ok(random_simple_digraph_with(
        &components,
        &mut ChaCha8Rng::seed_from_u64(seed),
    ))
}

/// A uniformly random simple signed digraph drawn from `rng`.
pub fn random_simple_digraph_with(components: &Components, rng: &mut impl Rng) -> SignedDigraph {
    let n = components.len();
    let mut g = SignedDigraph::empty(components.clone());
    for j in 0..n {
        for i in 0..n {
            match rng.random_range(0..3u8) {
                1 => g.pos[j] |= 1 << i,
                2 => g.neg[j] |= 1 << i,
                _ => {}
            }
        }
    }
    g
}

/// A random signed digraph (both signs allowed on a pair) on `1..=n`.
pub fn random_signed_digraph(n: usize, seed: u64) -> Result<SignedDigraph> {
    let components = Components::range(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let full = full_mask(n);
    let pos = (0..n).map(|_| rng.random::<u32>() & full).collect();
    let neg = (0..n).map(|_| rng.random::<u32>() & full).collect();
    Ok(SignedDigraph::from_masks(components, pos, neg))
}

/// Which cycles of a local graph are counted by [`counting_condition`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleFilter {
    All,
    PositiveChordless,
    NegativeChordless,
}

/// Graph in which chords of a local cycle are looked for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ChordHost {
    /// The local graph `Gf(x)` containing the cycle.
    #[default]
    Local,
    /// The global graph `G(f)`.
    Global,
}

/// A counting condition over local interaction graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountingCondition {
    pub filter: CycleFilter,
    pub host: ChordHost,
    /// Count points with a filtered cycle of length exactly `k` instead of at most `k`.
    pub exact_length: bool,
}

impl CountingCondition {
    pub fn new(filter: CycleFilter) -> Self {
        CountingCondition {
            filter,
            host: ChordHost::Local,
            exact_length: false,
        }
    }

    /// `counts[k-1]` = number of points `x` such that `Gf(x)` has a filtered cycle of
    /// length `k` (exact) or at most `k`.
    pub fn counts(&self, f: &BooleanNetwork) -> Vec<u64> {
        let n = f.width();
        let global =
            (self.host == ChordHost::Global && self.filter != CycleFilter::All).then(|| global_interaction_graph(f));
        let mut counts = vec![0u64; n];
        for x in 0..1u32 << n {
            let g = local_interaction_graph_code(f, x);
            let host = global.as_ref().unwrap_or(&g);
            let lengths = filtered_cycle_lengths(&g, host, self.filter);
            for (k, slot) in counts.iter_mut().enumerate() {
                let len = k + 1;
                let hit = if self.exact_length {
                    lengths >> len & 1 == 1
                } else {
                    lengths & ((2u64 << len) - 1) != 0
                };
                if hit {
                    *slot += 1;
                }
            }
        }
        counts
    }

    /// For every `1 ≤ k ≤ n`, at most `2^k − 1` points are counted.
    pub fn holds(&self, f: &BooleanNetwork) -> bool {
        self.counts(f).iter().enumerate().all(|(k, &c)| c < 1u64 << (k + 1))
    }
}

/// Bit `k` is set when `g` has a cycle of length `k` passing `filter`, with chords
/// looked up in `host`.
fn filtered_cycle_lengths(g: &SignedDigraph, host: &SignedDigraph, filter: CycleFilter) -> u64 {
    if filter == CycleFilter::All && g.is_acyclic() {
        return 0;
    }
    let mut lengths = 0u64;
    let _ = g.for_each_cycle(|vs, ss| {
        let wanted = match filter {
            CycleFilter::All => true,
            CycleFilter::PositiveChordless | CycleFilter::NegativeChordless => {
                let negative = ss.iter().filter(|s| s.is_negative()).count() % 2 == 1;
                negative == (filter == CycleFilter::NegativeChordless) && chordless_in(host, vs)
            }
        };
        if wanted {
            lengths |= 1 << vs.len();
        }
        ControlFlow::Continue(())
    });
    lengths
}

fn chordless_in(host: &SignedDigraph, vertices: &[usize]) -> bool {
    let m = vertices.iter().fold(0u32, |m, &v| m | 1 << v);
    let k = vertices.len();
    (0..k).all(|i| host.out_mask(vertices[i]) & m == 1 << vertices[(i + 1) % k])
}

/// Every local interaction graph is acyclic.
pub fn shih_dong_condition(f: &BooleanNetwork) -> bool {
    (0..1u32 << f.width()).all(|x| local_interaction_graph_code(f, x).is_acyclic())
}

/// For every `1 ≤ k ≤ n`, at most `2^k − 1` points `x` have a filtered cycle of length
/// at most `k` in `Gf(x)`; chordless means chordless within `Gf(x)`.
pub fn counting_condition(f: &BooleanNetwork, filter: CycleFilter) -> bool {
    CountingCondition::new(filter).holds(f)
}

/// No local interaction graph has a cycle of the given sign.
pub fn no_local_cycle_of_sign(f: &BooleanNetwork, sign: Sign) -> bool {
    (0..1u32 << f.width()).all(|x| {
        let g = local_interaction_graph_code(f, x);
        match sign {
            Sign::Negative => !g.has_negative_cycle(),
            Sign::Positive => !g.has_positive_cycle(),
        }
    })
}

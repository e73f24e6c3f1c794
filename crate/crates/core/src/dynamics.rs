//! Asynchronous state graph, attractors and convergence predicates.

use std::fmt;

use crate::error::{Error, Result};
use crate::hypercube::{bits, compress, render_bits, Components, Point};
use crate::network::BooleanNetwork;
use crate::subnetwork::SubnetworkSpec;

/// Largest width for which the asynchronous state graph is built.
pub const MAX_DYNAMICS_WIDTH: usize = 20;

/// `Γ(f)`: an arc `x → x⊕e_i` whenever `f_i(x) ≠ x_i`.
///
/// Stored as the conjugate table, whose bit `i` at `x` marks the arc flipping `i`.
#[derive(Clone, PartialEq, Eq)]
pub struct StateGraph {
    components: Components,
    flips: Vec<u32>,
}

impl StateGraph {
    pub fn new(f: &BooleanNetwork) -> Result<Self> {
        let n = f.width();
        if n > MAX_DYNAMICS_WIDTH {
            return Err(Error::WidthCap {
                width: n,
                cap: MAX_DYNAMICS_WIDTH,
                what: "asynchronous state graph",
            });
        }
        let flips = (0..1u32 << n).map(|x| f.eval_conjugate(x)).collect();
        Ok(StateGraph {
            components: f.components().clone(),
            flips,
        })
    }

    pub fn components(&self) -> &Components {
        &self.components
    }

    pub fn width(&self) -> usize {
        self.components.len()
    }

    pub fn state_count(&self) -> usize {
        self.flips.len()
    }

    /// Components flipped by the arcs leaving `x`.
    #[inline]
    pub fn flips(&self, x: u32) -> u32 {
        self.flips[x as usize]
    }

    pub fn successors(&self, x: u32) -> impl Iterator<Item = u32> + '_ {
        bits(self.flips(x)).map(move |i| x ^ 1 << i)
    }

    /// All arcs, ordered by source then flipped component.
    pub fn arcs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..self.flips.len() as u32).flat_map(move |x| self.successors(x).map(move |y| (x, y)))
    }

    pub fn arc_count(&self) -> usize {
        self.flips.iter().map(|m| m.count_ones() as usize).sum()
    }

    /// States without outgoing arcs, i.e. fixed points.
    pub fn sinks(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.flips.len() as u32).filter(|&x| self.flips(x) == 0)
    }

    /// Arcs of the subgraph induced by the subcube of `spec`, projected onto the free
    /// components.
    pub fn projected_arcs(&self, spec: &SubnetworkSpec) -> Vec<(u32, u32)> {
        let free = spec.free_mask();
        let k = free.count_ones();
        let mut out = Vec::new();
        for inner in 0..1u32 << k {
            let x = spec.embed(inner);
            for y in self.successors(x) {
                if spec.contains_code(y) {
                    out.push((inner, compress(y, free)));
                }
            }
        }
        out
    }

    /// Strongly connected components, each sorted, in reverse topological order.
    pub fn strong_components(&self) -> Vec<Vec<u32>> {
        tarjan(self)
    }

    /// True when `Γ(f)` has a directed cycle.
    pub fn has_cycle(&self) -> bool {
        // Kahn's algorithm on in-degrees
        let n = self.flips.len();
        let mut indeg = vec![0u32; n];
        for (_, y) in self.arcs() {
            indeg[y as usize] += 1;
        }
        let mut queue: Vec<u32> = (0..n as u32).filter(|&x| indeg[x as usize] == 0).collect();
        let mut removed = 0;
        while let Some(x) = queue.pop() {
            removed += 1;
            for y in self.successors(x) {
                let d = &mut indeg[y as usize];
                *d -= 1;
                if *d == 0 {
                    queue.push(y);
                }
            }
        }
        removed < n
    }
}

impl fmt::Debug for StateGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.width();
        write!(f, "StateGraph[{}](", self.components)?;
        for (k, (x, y)) in self.arcs().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}>{}", render_bits(x, n), render_bits(y, n))?;
        }
        f.write_str(")")
    }
}

fn tarjan(g: &StateGraph) -> Vec<Vec<u32>> {
    const UNSEEN: u32 = u32::MAX;
    let n = g.state_count();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0u32; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<u32> = Vec::new();
    let mut out = Vec::new();
    let mut next = 0u32;
    // (state, remaining flips to explore)
    let mut work: Vec<(u32, u32)> = Vec::new();
    for root in 0..n as u32 {
        if index[root as usize] != UNSEEN {
            continue;
        }
        work.push((root, g.flips(root)));
        index[root as usize] = next;
        low[root as usize] = next;
        next += 1;
        stack.push(root);
        on_stack[root as usize] = true;
        while let Some(&mut (v, ref mut pending)) = work.last_mut() {
            if *pending != 0 {
                let i = pending.trailing_zeros();
                *pending &= *pending - 1;
                let w = v ^ 1 << i;
                let wi = w as usize;
                if index[wi] == UNSEEN {
                    index[wi] = next;
                    low[wi] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[wi] = true;
                    work.push((w, g.flips(w)));
                } else if on_stack[wi] {
                    low[v as usize] = low[v as usize].min(index[wi]);
                }
                continue;
            }
            work.pop();
            if let Some(&(parent, _)) = work.last() {
                low[parent as usize] = low[parent as usize].min(low[v as usize]);
            }
            if low[v as usize] == index[v as usize] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("component root is on the stack");
                    on_stack[w as usize] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                out.push(comp);
            }
        }
    }
    out
}

/// A terminal strongly connected component of `Γ(f)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Attractor {
    states: Vec<u32>,
    components: Components,
}

impl Attractor {
    pub fn states(&self) -> &[u32] {
        &self.states
    }

    pub fn points(&self) -> Vec<Point> {
        self.states.iter().map(|&x| self.components.point(x)).collect()
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// Contains at least two states.
    pub fn is_cyclic(&self) -> bool {
        self.states.len() > 1
    }

    /// A single state, which is then a fixed point.
    pub fn is_punctual(&self) -> bool {
        self.states.len() == 1
    }
}

impl fmt::Display for Attractor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.components.len();
        f.write_str("{")?;
        for (k, &x) in self.states.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            f.write_str(&render_bits(x, n))?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Attractor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Attractor{self}")
    }
}

pub fn asynchronous_state_graph(f: &BooleanNetwork) -> Result<StateGraph> {
    StateGraph::new(f)
}

/// Terminal strongly connected components, ordered by their smallest state.
pub fn attractors(f: &BooleanNetwork) -> Result<Vec<Attractor>> {
    let g = StateGraph::new(f)?;
    Ok(attractors_of(&g))
}

pub fn attractors_of(g: &StateGraph) -> Vec<Attractor> {
    let comps = g.strong_components();
    let mut id = vec![0usize; g.state_count()];
    for (c, states) in comps.iter().enumerate() {
        for &x in states {
            id[x as usize] = c;
        }
    }
    let mut out: Vec<Attractor> = comps
        .iter()
        .enumerate()
        .filter(|(c, states)| states.iter().all(|&x| g.successors(x).all(|y| id[y as usize] == *c)))
        .map(|(_, states)| Attractor {
            states: states.clone(),
            components: g.components.clone(),
        })
        .collect();
    out.sort_by(|a, b| a.states.cmp(&b.states));
    out
}

fn unique_fixed_point(f: &BooleanNetwork) -> Option<u32> {
    let mut fps = f.fixed_point_codes();
    let first = fps.next()?;
    fps.next().is_none().then_some(first)
}

/// `f` has a unique fixed point `x*` and every state `y` reaches `x*` by a path of
/// length `d(x*, y)` in `Γ(f)`.
pub fn weak_convergence(f: &BooleanNetwork) -> Result<bool> {
    let g = StateGraph::new(f)?;
    Ok(weak_convergence_of(f, &g))
}

pub fn weak_convergence_of(f: &BooleanNetwork, g: &StateGraph) -> bool {
    let Some(target) = unique_fixed_point(f) else {
        return false;
    };
    let n = g.width();
    // a geodesic step from y flips a component where y and x* differ, so process
    // states by increasing distance to x*
    let mut deltas: Vec<u32> = (0..1u32 << n).collect();
    deltas.sort_by_key(|d| d.count_ones());
    let mut good = vec![false; 1 << n];
    for d in deltas {
        let y = target ^ d;
        good[y as usize] = d == 0 || bits(g.flips(y) & d).any(|i| good[(y ^ 1 << i) as usize]);
        if !good[y as usize] {
            return false;
        }
    }
    true
}

/// `f` has a unique fixed point and `Γ(f)` has no cycle.
pub fn strong_convergence(f: &BooleanNetwork) -> Result<bool> {
    let g = StateGraph::new(f)?;
    Ok(unique_fixed_point(f).is_some() && !g.has_cycle())
}

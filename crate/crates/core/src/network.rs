//! Boolean networks `f: {0,1}^V → {0,1}^V` stored as dense truth tables.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypercube::{self, full_mask, is_even, render_bits, ComponentSet, Components, Point, PointSet, MAX_WIDTH};

/// Largest width accepted by [`enumerate_networks`].
pub const MAX_ENUMERATION_WIDTH: usize = 3;

/// Class of the image of the conjugate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParityClass {
    Even,
    Odd,
    Neither,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EosdClass {
    EvenSelfDual,
    OddSelfDual,
    Neither,
}

impl fmt::Display for ParityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl fmt::Display for EosdClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A Boolean network over an ordered component list.
///
/// `table[x]` is the code of `f(x)` for every input code `x`; the table is the
/// ground truth for every predicate in this crate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BooleanNetwork {
    components: Components,
    table: Vec<u32>,
}

impl BooleanNetwork {
    pub fn new(components: Components, table: Vec<u32>) -> Result<Self> {
        let n = components.len();
        if table.len() != 1 << n {
            return Err(Error::InvalidSpec(format!(
                "table has {} rows, expected {}",
                table.len(),
                1u64 << n
            )));
        }
        if let Some(bad) = table.iter().find(|&&y| y & !full_mask(n) != 0) {
            return Err(Error::InvalidSpec(format!("output code {bad} wider than {n} bits")));
        }
        Ok(BooleanNetwork { components, table })
    }

    /// Builds the network by evaluating `map` on every input code.
    pub fn from_fn(components: Components, mut map: impl FnMut(u32) -> u32) -> Self {
        let mask = components.full_mask();
        let table = (0..1u32 << components.len()).map(|x| map(x) & mask).collect();
        BooleanNetwork { components, table }
    }

    pub(crate) fn from_parts_unchecked(components: Components, table: Vec<u32>) -> Self {
        debug_assert_eq!(table.len(), 1 << components.len());
        BooleanNetwork { components, table }
    }

    pub fn identity(components: Components) -> Self {
        Self::from_fn(components, |x| x)
    }

    pub fn negation(components: Components) -> Self {
        Self::from_fn(components, |x| !x)
    }

    pub fn constant(components: Components, value: u32) -> Self {
        Self::from_fn(components, |_| value)
    }

    pub fn components(&self) -> &Components {
        &self.components
    }

    pub fn width(&self) -> usize {
        self.components.len()
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    /// Raw table lookup by input code.
    #[inline]
    pub fn eval(&self, x: u32) -> u32 {
        self.table[x as usize]
    }

    /// `f̃(x) = f(x) ⊕ x` by input code.
    #[inline]
    pub fn eval_conjugate(&self, x: u32) -> u32 {
        self.table[x as usize] ^ x
    }

    pub fn evaluate(&self, x: &Point) -> Result<Point> {
        self.components.ensure_same(x.components())?;
        Ok(self.components.point(self.eval(x.code())))
    }

    /// The local transition function `f_i` at `x`.
    pub fn local(&self, label: &str, x: &Point) -> Result<bool> {
        let i = self.components.index_of(label)?;
        Ok(self.evaluate(x)?.code() >> i & 1 == 1)
    }

    pub fn conjugate(&self) -> BooleanNetwork {
        let table = self.table.iter().enumerate().map(|(x, &y)| y ^ x as u32).collect();
        BooleanNetwork {
            components: self.components.clone(),
            table,
        }
    }

    pub fn is_self_dual(&self) -> bool {
        let mask = self.components.full_mask();
        (0..self.table.len() as u32 / 2 + 1).all(|x| self.eval(x ^ mask) == self.eval(x) ^ mask)
    }

    /// Image of the conjugate as a point set.
    pub fn conjugate_image(&self) -> PointSet {
        let mut image = PointSet::empty(&self.components);
        for x in 0..self.table.len() as u32 {
            image.insert_code(self.eval_conjugate(x));
        }
        image
    }

    pub fn parity_class(&self) -> ParityClass {
        let n = self.width();
        let mut parity = None;
        for x in 0..self.table.len() as u32 {
            let even = is_even(self.eval_conjugate(x));
            match parity {
                None => parity = Some(even),
                Some(p) if p != even => return ParityClass::Neither,
                _ => {}
            }
        }
        // all images share one parity; the class needs every point of that parity hit
        if self.conjugate_image().len() != 1 << (n - 1) {
            return ParityClass::Neither;
        }
        match parity {
            Some(true) => ParityClass::Even,
            _ => ParityClass::Odd,
        }
    }

    pub fn eosd_class(&self) -> EosdClass {
        if !self.is_self_dual() {
            return EosdClass::Neither;
        }
        match self.parity_class() {
            ParityClass::Even => EosdClass::EvenSelfDual,
            ParityClass::Odd => EosdClass::OddSelfDual,
            ParityClass::Neither => EosdClass::Neither,
        }
    }

    /// `d(f(x), f(y)) ≤ d(x, y)` for all `x, y`, checked on Hamming-adjacent pairs.
    pub fn is_non_expansive(&self) -> bool {
        let n = self.width();
        (0..self.table.len() as u32).all(|x| {
            (0..n).all(|i| {
                let y = x | 1 << i;
                y == x || (self.eval(x) ^ self.eval(y)).count_ones() <= 1
            })
        })
    }

    pub fn fixed_point_codes(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.table.len() as u32).filter(move |&x| self.eval(x) == x)
    }

    pub fn fixed_point_count(&self) -> usize {
        self.fixed_point_codes().count()
    }

    /// Fixed points in ascending code order.
    pub fn fixed_points(&self) -> Vec<Point> {
        self.fixed_point_codes().map(|c| self.components.point(c)).collect()
    }

    pub fn is_conjugate_bijective(&self) -> bool {
        let mut seen = PointSet::empty(&self.components);
        for x in 0..self.table.len() as u32 {
            let y = self.eval_conjugate(x);
            if seen.contains_code(y) {
                return false;
            }
            seen.insert_code(y);
        }
        true
    }

    /// `f'(x) = f(x) ⊕ e_I`.
    pub fn xor_output(&self, set: &ComponentSet) -> Result<BooleanNetwork> {
        self.components.ensure_same(set.components())?;
        let e = set.mask();
        Ok(BooleanNetwork {
            components: self.components.clone(),
            table: self.table.iter().map(|y| y ^ e).collect(),
        })
    }

    /// `f'(x) = f(x ⊕ e_I) ⊕ e_I`.
    pub fn translate(&self, set: &ComponentSet) -> Result<BooleanNetwork> {
        self.components.ensure_same(set.components())?;
        let e = set.mask();
        Ok(Self::from_fn(self.components.clone(), |x| self.eval(x ^ e) ^ e))
    }

    /// Canonical `.bn` text.
    pub fn to_bn(&self) -> String {
        let n = self.width();
        let mut out = format!("components {}\n", self.components);
        for (x, &y) in self.table.iter().enumerate() {
            out.push_str(&render_bits(x as u32, n));
            out.push_str(" -> ");
            out.push_str(&render_bits(y, n));
            out.push('\n');
        }
        out
    }

    /// Parses `.bn` text: a `components` header, then one `<in> -> <out>` row per input.
    ///
    /// Rows may come in any order but every input must appear exactly once.
    pub fn parse_bn(text: &str) -> Result<BooleanNetwork> {
        let mut components: Option<Components> = None;
        let mut table: Vec<Option<u32>> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line_no = lineno + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            match &components {
                None => {
                    let mut words = line.split_whitespace();
                    if words.next() != Some("components") {
                        return Err(Error::parse(line_no, "expected `components <label> …` header"));
                    }
                    let labels: Vec<&str> = words.collect();
                    let comps = Components::new(&labels).map_err(|e| match e {
                        Error::WidthCap { .. } => e,
                        other => Error::parse(line_no, other.to_string()),
                    })?;
                    table = vec![None; 1 << comps.len()];
                    components = Some(comps);
                }
                Some(comps) => {
                    let n = comps.len();
                    let (lhs, rhs) = line
                        .split_once("->")
                        .ok_or_else(|| Error::parse(line_no, "expected `<input> -> <output>`"))?;
                    let x = hypercube::parse_bits(lhs.trim(), n)
                        .ok_or_else(|| Error::parse(line_no, format!("bad input `{}`", lhs.trim())))?;
                    let y = hypercube::parse_bits(rhs.trim(), n)
                        .ok_or_else(|| Error::parse(line_no, format!("bad output `{}`", rhs.trim())))?;
                    let slot = &mut table[x as usize];
                    if slot.is_some() {
                        return Err(Error::parse(line_no, format!("duplicate row for input {}", lhs.trim())));
                    }
                    *slot = Some(y);
                }
            }
        }
        let components = components.ok_or_else(|| Error::parse(0, "missing `components` header"))?;
        let n = components.len();
        let table = table
            .into_iter()
            .enumerate()
            .map(|(x, y)| {
                y.ok_or_else(|| Error::parse(0, format!("missing row for input {}", render_bits(x as u32, n))))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BooleanNetwork { components, table })
    }
}

impl fmt::Debug for BooleanNetwork {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.width();
        write!(f, "BooleanNetwork[{}](", self.components)?;
        for (x, &y) in self.table.iter().enumerate() {
            if x > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}>{}", render_bits(x as u32, n), render_bits(y, n))?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for BooleanNetwork {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bn())
    }
}

/// Number of distinct networks of width `n`, `2^(n·2^n)`, when it fits in a `u64`.
pub fn network_count(n: usize) -> Option<u64> {
    let bits = n.checked_mul(1 << n)?;
    (bits < 64).then(|| 1u64 << bits)
}

/// The network with enumeration index `index`.
///
/// Output `f(x)` occupies bits `n·x .. n·x + n` of the index, so index 0 is the
/// constant-zero network and consecutive indices first vary `f(0)`.
pub fn network_from_index(components: &Components, index: u64) -> BooleanNetwork {
    let n = components.len();
    let mask = full_mask(n) as u64;
    let table = (0..1usize << n).map(|x| ((index >> (n * x)) & mask) as u32).collect();
    BooleanNetwork::from_parts_unchecked(components.clone(), table)
}

/// All networks on `components` in index order (see [`network_from_index`]).
pub fn enumerate_networks(components: &Components) -> Result<impl Iterator<Item = BooleanNetwork> + '_> {
    let n = components.len();
    if n > MAX_ENUMERATION_WIDTH {
        return Err(Error::WidthCap {
            width: n,
            cap: MAX_ENUMERATION_WIDTH,
            what: "exhaustive enumeration",
        });
    }
    let count = network_count(n).expect("fits for n <= 3");
    Ok((0..count).map(move |k| network_from_index(components, k)))
}

/// A uniformly random network on `1..=n`, reproducible from `seed`.
pub fn random_network(n: usize, seed: u64) -> Result<BooleanNetwork> {
    if n == 0 || n > MAX_WIDTH {
        return Err(Error::WidthCap {
            width: n,
            cap: MAX_WIDTH,
            what: "random networks",
        });
    }
    Ok(random_network_on(&Components::range(n)?, seed))
}

pub fn random_network_on(components: &Components, seed: u64) -> BooleanNetwork {
    random_network_with(components, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// A uniformly random network drawn from `rng`.
pub fn random_network_with(components: &Components, rng: &mut impl Rng) -> BooleanNetwork {
    let mask = components.full_mask();
    BooleanNetwork::from_fn(components.clone(), |_| rng.random::<u32>() & mask)
}

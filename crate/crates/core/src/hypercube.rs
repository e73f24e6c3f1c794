//! Points of the Boolean hypercube and component bookkeeping.
//!
//! A point over an ordered component list is stored as an unsigned code whose
//! bit `k` holds the `k`-th component in ascending label order. The textual
//! form writes the smallest label first, so the string `"001"` over the
//! components `1 2 3` sets component `3`, which is bit 2 of the code.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported component count.
pub const MAX_WIDTH: usize = 24;

/// Mask with the lowest `n` bits set.
#[inline]
pub fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

#[inline]
pub fn weight(code: u32) -> u32 {
    code.count_ones()
}

#[inline]
pub fn is_even(code: u32) -> bool {
    code.count_ones().is_multiple_of(2)
}

/// Gathers the bits of `code` selected by `mask` into the low bits, keeping their order.
#[inline]
pub fn compress(code: u32, mask: u32) -> u32 {
    let mut out = 0;
    let mut m = mask;
    let mut k = 0;
    while m != 0 {
        let bit = m & m.wrapping_neg();
        if code & bit != 0 {
            out |= 1 << k;
        }
        k += 1;
        m ^= bit;
    }
    out
}

/// Inverse of [`compress`]: spreads the low bits of `code` onto the positions set in `mask`.
#[inline]
pub fn deposit(code: u32, mask: u32) -> u32 {
    let mut out = 0;
    let mut m = mask;
    let mut k = 0;
    while m != 0 {
        let bit = m & m.wrapping_neg();
        if code & (1 << k) != 0 {
            out |= bit;
        }
        k += 1;
        m ^= bit;
    }
    out
}

/// Iterates over the indices of the set bits of `mask`, lowest first.
pub fn bits(mask: u32) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let k = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(k)
        }
    })
}

/// Renders `code` as a `width`-character bit string, component 0 first.
pub fn render_bits(code: u32, width: usize) -> String {
    (0..width).map(|k| if code >> k & 1 == 1 { '1' } else { '0' }).collect()
}

/// Parses a bit string written component 0 first.
pub fn parse_bits(text: &str, width: usize) -> Option<u32> {
    if text.len() != width {
        return None;
    }
    let mut code = 0;
    for (k, c) in text.bytes().enumerate() {
        match c {
            b'0' => {}
            b'1' => code |= 1 << k,
            _ => return None,
        }
    }
    Some(code)
}

/// A component identifier.
///
/// Labels that parse as unsigned integers compare numerically and sort before
/// all other labels, which compare as strings.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Label(Arc<str>);

impl Label {
    pub fn new(text: &str) -> Result<Self> {
        if text.is_empty()
            || text
                .chars()
                .any(|c| c.is_whitespace() || matches!(c, '#' | '{' | '}' | ',' | '[' | ']' | '='))
        {
            return Err(Error::InvalidComponents(format!("bad label `{text}`")));
        }
        Ok(Label(Arc::from(text)))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    fn numeric(&self) -> Option<u64> {
        self.0.parse().ok()
    }
}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.numeric(), other.numeric()) {
            (Some(a), Some(b)) => a.cmp(&b).then_with(|| self.0.cmp(&other.0)),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => self.0.cmp(&other.0),
        }
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An ordered, duplicate-free list of component labels (the set `V`).
#[derive(Clone)]
pub struct Components(Arc<[Label]>);

impl Components {
    /// Builds a component list; labels must be given in strictly ascending order.
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let labels = labels
            .into_iter()
            .map(|s| Label::new(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::from_labels(labels)
    }

    pub fn from_labels(labels: Vec<Label>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::InvalidComponents("no components".into()));
        }
        if labels.len() > MAX_WIDTH {
            return Err(Error::WidthCap {
                width: labels.len(),
                cap: MAX_WIDTH,
                what: "component lists",
            });
        }
        for w in labels.windows(2) {
            match w[0].cmp(&w[1]) {
                Ordering::Less => {}
                Ordering::Equal => return Err(Error::InvalidComponents(format!("duplicate label `{}`", w[0]))),
                Ordering::Greater => {
                    return Err(Error::InvalidComponents(format!(
                        "labels not in ascending order: `{}` before `{}`",
                        w[0], w[1]
                    )))
                }
            }
        }
        Ok(Components(labels.into()))
    }

    /// The components `1, 2, …, n`.
    pub fn range(n: usize) -> Result<Self> {
        Self::new((1..=n).map(|k| k.to_string()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.0
    }

    pub fn label(&self, index: usize) -> &Label {
        &self.0[index]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.0
            .iter()
            .position(|l| l.as_str() == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn full_mask(&self) -> u32 {
        full_mask(self.len())
    }

    /// The sub-list of components selected by `mask`.
    pub fn select(&self, mask: u32) -> Result<Components> {
        if mask == 0 {
            return Err(Error::EmptyWidth);
        }
        let labels = bits(mask & self.full_mask())
            .map(|k| self.0[k].clone())
            .collect::<Vec<_>>();
        Ok(Components(labels.into()))
    }

    pub fn set<S: AsRef<str>>(&self, labels: &[S]) -> Result<ComponentSet> {
        let mut mask = 0;
        for l in labels {
            mask |= 1 << self.index_of(l.as_ref())?;
        }
        Ok(ComponentSet {
            components: self.clone(),
            mask,
        })
    }

    pub fn set_from_mask(&self, mask: u32) -> Result<ComponentSet> {
        if mask & !self.full_mask() != 0 {
            return Err(Error::InvalidSpec(format!(
                "mask {mask:#b} outside {} components",
                self.len()
            )));
        }
        Ok(ComponentSet {
            components: self.clone(),
            mask,
        })
    }

    pub fn empty_set(&self) -> ComponentSet {
        ComponentSet {
            components: self.clone(),
            mask: 0,
        }
    }

    pub fn full_set(&self) -> ComponentSet {
        ComponentSet {
            components: self.clone(),
            mask: self.full_mask(),
        }
    }

    pub fn point(&self, code: u32) -> Point {
        Point {
            components: self.clone(),
            bits: code & self.full_mask(),
        }
    }

    pub fn parse_point(&self, text: &str) -> Result<Point> {
        let bits = parse_bits(text.trim(), self.len())
            .ok_or_else(|| Error::parse(0, format!("`{text}` is not a {}-bit point", self.len())))?;
        Ok(self.point(bits))
    }

    /// All `2^n` points in ascending code order.
    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        (0..1u32 << self.len()).map(move |c| self.point(c))
    }

    pub(crate) fn ensure_same(&self, other: &Components) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ComponentMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }
}

impl PartialEq for Components {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Components {}

impl std::hash::Hash for Components {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }
}

impl fmt::Display for Components {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Components {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// A subset `I` of a component list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ComponentSet {
    components: Components,
    mask: u32,
}

impl ComponentSet {
    pub fn components(&self) -> &Components {
        &self.components
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, label: &str) -> bool {
        self.components
            .index_of(label)
            .map(|k| self.mask >> k & 1 == 1)
            .unwrap_or(false)
    }

    pub fn complement(&self) -> ComponentSet {
        ComponentSet {
            components: self.components.clone(),
            mask: !self.mask & self.components.full_mask(),
        }
    }

    pub fn labels(&self) -> impl Iterator<Item = &Label> {
        bits(self.mask).map(move |k| self.components.label(k))
    }
}

impl fmt::Display for ComponentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, l) in self.labels().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for ComponentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A configuration `x ∈ {0,1}^V`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Point {
    components: Components,
    bits: u32,
}

impl Point {
    pub fn components(&self) -> &Components {
        &self.components
    }

    pub fn width(&self) -> usize {
        self.components.len()
    }

    /// The integer code of the point (bit `k` = `k`-th component).
    pub fn code(&self) -> u32 {
        self.bits
    }

    pub fn get(&self, label: &str) -> Result<bool> {
        Ok(self.bits >> self.components.index_of(label)? & 1 == 1)
    }

    /// `‖x‖`, the number of components set to 1.
    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn is_even(&self) -> bool {
        is_even(self.bits)
    }

    /// `𝟏(x)`.
    pub fn ones(&self) -> ComponentSet {
        ComponentSet {
            components: self.components.clone(),
            mask: self.bits,
        }
    }

    pub fn xor(&self, other: &Point) -> Result<Point> {
        self.components.ensure_same(&other.components)?;
        Ok(Point {
            components: self.components.clone(),
            bits: self.bits ^ other.bits,
        })
    }

    pub fn hamming(&self, other: &Point) -> Result<u32> {
        self.components.ensure_same(&other.components)?;
        Ok((self.bits ^ other.bits).count_ones())
    }

    /// `x ⊕ 1`.
    pub fn antipode(&self) -> Point {
        self.components.point(!self.bits)
    }

    /// `x|_I`, the restriction to the components of `set`.
    pub fn restrict(&self, set: &ComponentSet) -> Result<Point> {
        self.components.ensure_same(&set.components)?;
        if set.mask == 0 {
            return Err(Error::EmptyWidth);
        }
        Ok(Point {
            components: self.components.select(set.mask)?,
            bits: compress(self.bits, set.mask),
        })
    }

    /// `x_{-I}`, the restriction to the components outside `set`.
    pub fn drop(&self, set: &ComponentSet) -> Result<Point> {
        self.restrict(&set.complement())
    }

    /// `x^{iα}`.
    pub fn set_component(&self, label: &str, value: bool) -> Result<Point> {
        let k = self.components.index_of(label)?;
        let bits = if value {
            self.bits | 1 << k
        } else {
            self.bits & !(1 << k)
        };
        Ok(Point {
            components: self.components.clone(),
            bits,
        })
    }

    /// `x ⊕ e_i`.
    pub fn flip(&self, label: &str) -> Result<Point> {
        let k = self.components.index_of(label)?;
        Ok(self.components.point(self.bits ^ 1 << k))
    }
}

impl PartialOrd for Point {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Point {
    fn cmp(&self, other: &Self) -> Ordering {
        self.bits
            .cmp(&other.bits)
            .then_with(|| self.components.0.cmp(&other.components.0))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_bits(self.bits, self.width()))
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `e_I`: the point whose ones are exactly `set`.
pub fn basis_point(set: &ComponentSet) -> Point {
    set.components.point(set.mask)
}

/// Rebuilds the full point from its restriction to `set` and to the complement.
pub fn recombine(inside: &Point, outside: &Point, set: &ComponentSet) -> Result<Point> {
    let mask = set.mask;
    let comps = &set.components;
    if inside.width() != mask.count_ones() as usize || outside.width() != comps.len() - mask.count_ones() as usize {
        return Err(Error::WidthMismatch {
            left: inside.width() + outside.width(),
            right: comps.len(),
        });
    }
    let outer = !mask & comps.full_mask();
    Ok(comps.point(deposit(inside.bits, mask) | deposit(outside.bits, outer)))
}

/// A set of points of one hypercube, stored as a bitset over the `2^n` codes.
#[derive(Clone, PartialEq, Eq)]
pub struct PointSet {
    components: Components,
    words: Vec<u64>,
}

impl PointSet {
    pub fn empty(components: &Components) -> Self {
        let size = 1usize << components.len();
        PointSet {
            components: components.clone(),
            words: vec![0; size.div_ceil(64)],
        }
    }

    /// Builds a set from the low `2^n` bits of `mask` (point code `c` ↔ bit `c`); `n ≤ 6`.
    pub fn from_mask(components: &Components, mask: u64) -> Self {
        let mut s = Self::empty(components);
        let size = 1u64 << components.len();
        s.words[0] = if size >= 64 { mask } else { mask & ((1 << size) - 1) };
        s
    }

    pub fn even_points(components: &Components) -> Self {
        let mut s = Self::empty(components);
        for c in 0..1u32 << components.len() {
            if is_even(c) {
                s.insert_code(c);
            }
        }
        s
    }

    pub fn odd_points(components: &Components) -> Self {
        let mut s = Self::empty(components);
        for c in 0..1u32 << components.len() {
            if !is_even(c) {
                s.insert_code(c);
            }
        }
        s
    }

    pub fn components(&self) -> &Components {
        &self.components
    }

    #[inline]
    pub fn insert_code(&mut self, code: u32) {
        self.words[(code >> 6) as usize] |= 1 << (code & 63);
    }

    #[inline]
    pub fn contains_code(&self, code: u32) -> bool {
        self.words[(code >> 6) as usize] >> (code & 63) & 1 == 1
    }

    pub fn insert(&mut self, point: &Point) -> Result<()> {
        self.components.ensure_same(&point.components)?;
        self.insert_code(point.bits);
        Ok(())
    }

    pub fn contains(&self, point: &Point) -> bool {
        self.components == point.components && self.contains_code(point.bits)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_disjoint(&self, other: &PointSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn codes(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut m = word;
            std::iter::from_fn(move || {
                if m == 0 {
                    None
                } else {
                    let k = m.trailing_zeros();
                    m &= m - 1;
                    Some((w as u32) << 6 | k)
                }
            })
        })
    }

    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        self.codes().map(|c| self.components.point(c))
    }

    pub fn to_btree(&self) -> BTreeSet<Point> {
        self.points().collect()
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        let mut pts: Vec<String> = self.points().map(|p| p.to_string()).collect();
        pts.sort();
        f.write_str(&pts.join(","))?;
        f.write_str("}")
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `N(X) = {x ⊕ e_i | x ∈ X, i ∈ V}`.
pub fn neighbor_set(set: &PointSet) -> PointSet {
    let n = set.components.len();
    let mut out = PointSet::empty(&set.components);
    for c in set.codes() {
        for i in 0..n {
            out.insert_code(c ^ 1 << i);
        }
    }
    out
}

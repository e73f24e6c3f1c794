//! Subnetworks (restrictions of a network to subcubes), criticality and
//! minimal forbidden sets.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::hypercube::{bits, compress, deposit, full_mask, render_bits, ComponentSet, Components, Point};
use crate::network::{enumerate_networks, BooleanNetwork, EosdClass, MAX_ENUMERATION_WIDTH};

/// Largest width for which the per-subnetwork fixed-point census is computed.
pub const MAX_CENSUS_WIDTH: usize = 14;

/// A subcube of `{0,1}^V`: free components `I` and a fixed assignment `z` of `V∖I`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubnetworkSpec {
    components: Components,
    free: u32,
    // z, embedded in V-coordinates; zero on `free`
    fixed: u32,
}

impl SubnetworkSpec {
    pub fn new(free: &ComponentSet, fixed: Option<&Point>) -> Result<Self> {
        let components = free.components().clone();
        let mask = free.mask();
        if mask == 0 {
            return Err(Error::InvalidSpec("free component set is empty".into()));
        }
        let outside = !mask & components.full_mask();
        let fixed = match fixed {
            None if outside == 0 => 0,
            None => return Err(Error::InvalidSpec("missing assignment of fixed components".into())),
            Some(z) => {
                if outside == 0 {
                    return Err(Error::InvalidSpec("no component left to fix".into()));
                }
                let expected = components.select(outside)?;
                expected.ensure_same(z.components()).map_err(|_| {
                    Error::InvalidSpec(format!(
                        "fixed point is over [{}], expected [{}]",
                        z.components(),
                        expected
                    ))
                })?;
                deposit(z.code(), outside)
            }
        };
        Ok(SubnetworkSpec {
            components,
            free: mask,
            fixed,
        })
    }

    /// Builds a spec from a free mask and a full-width code whose bits outside the mask give `z`.
    pub fn from_codes(components: &Components, free: u32, fixed: u32) -> Result<Self> {
        let full = components.full_mask();
        if free == 0 || free & !full != 0 {
            return Err(Error::InvalidSpec(format!("bad free mask {free:#b}")));
        }
        Ok(SubnetworkSpec {
            components: components.clone(),
            free,
            fixed: fixed & !free & full,
        })
    }

    /// The spec `I = V`, i.e. the network itself.
    pub fn whole(components: &Components) -> Self {
        SubnetworkSpec {
            components: components.clone(),
            free: components.full_mask(),
            fixed: 0,
        }
    }

    /// The spec of `f^{iα}`.
    pub fn immediate(components: &Components, label: &str, value: bool) -> Result<Self> {
        if components.len() < 2 {
            return Err(Error::InvalidSpec(
                "immediate subnetworks need at least two components".into(),
            ));
        }
        let i = components.index_of(label)?;
        let free = components.full_mask() & !(1 << i);
        Ok(SubnetworkSpec {
            components: components.clone(),
            free,
            fixed: if value { 1 << i } else { 0 },
        })
    }

    pub fn components(&self) -> &Components {
        &self.components
    }

    pub fn free_mask(&self) -> u32 {
        self.free
    }

    /// `z` embedded into full-width coordinates (zero on the free components).
    pub fn fixed_code(&self) -> u32 {
        self.fixed
    }

    pub fn free_set(&self) -> ComponentSet {
        self.components
            .set_from_mask(self.free)
            .expect("free mask validated at construction")
    }

    pub fn free_components(&self) -> Components {
        self.components.select(self.free).expect("free mask is non-empty")
    }

    pub fn fixed_point(&self) -> Option<Point> {
        let outside = !self.free & self.components.full_mask();
        (outside != 0).then(|| {
            self.components
                .select(outside)
                .expect("non-empty")
                .point(compress(self.fixed, outside))
        })
    }

    pub fn is_whole(&self) -> bool {
        self.free == self.components.full_mask()
    }

    /// True when `x_{-I} = z`.
    #[inline]
    pub fn contains_code(&self, x: u32) -> bool {
        x & !self.free & self.components.full_mask() == self.fixed
    }

    /// Full-width code of the point whose restriction to `I` is `inner`.
    #[inline]
    pub fn embed(&self, inner: u32) -> u32 {
        deposit(inner, self.free) | self.fixed
    }

    /// Parses the rendering produced by `Display`, e.g. `I={2,3} z[1]=0`.
    pub fn parse(components: &Components, text: &str) -> Result<Self> {
        let bad = |m: &str| Error::parse(0, format!("bad subnetwork `{text}`: {m}"));
        let mut words = text.split_whitespace();
        let head = words.next().ok_or_else(|| bad("empty"))?;
        let inner = head
            .strip_prefix("I={")
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(|| bad("expected I={…}"))?;
        let labels: Vec<&str> = inner.split(',').filter(|s| !s.is_empty()).collect();
        let free = components.set(&labels)?;
        let mut fixed = 0;
        let mut seen = 0;
        for w in words {
            let (lhs, rhs) = w.split_once('=').ok_or_else(|| bad("expected z[<label>]=<bit>"))?;
            let label = lhs
                .strip_prefix("z[")
                .and_then(|s| s.strip_suffix(']'))
                .ok_or_else(|| bad("expected z[<label>]"))?;
            let k = components.index_of(label)?;
            if free.mask() >> k & 1 == 1 || seen >> k & 1 == 1 {
                return Err(bad("component assigned twice or also free"));
            }
            seen |= 1 << k;
            match rhs {
                "0" => {}
                "1" => fixed |= 1 << k,
                _ => return Err(bad("bit must be 0 or 1")),
            }
        }
        if (seen | free.mask()) != components.full_mask() {
            return Err(bad("every non-free component needs a value"));
        }
        Self::from_codes(components, free.mask(), fixed)
    }
}

impl fmt::Display for SubnetworkSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I={}", self.free_set())?;
        let outside = !self.free & self.components.full_mask();
        for k in bits(outside) {
            write!(f, " z[{}]={}", self.components.label(k), self.fixed >> k & 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for SubnetworkSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Truth table of the subnetwork on `free` induced by `fixed`, over the free components.
pub(crate) fn sub_table(f: &BooleanNetwork, free: u32, fixed: u32) -> Vec<u32> {
    let k = free.count_ones();
    (0..1u32 << k)
        .map(|y| compress(f.eval(deposit(y, free) | fixed), free))
        .collect()
}

/// The subnetwork `h` with `h(x|_I) = f(x)|_I` whenever `x_{-I} = z`.
pub fn induced_subnetwork(f: &BooleanNetwork, spec: &SubnetworkSpec) -> Result<BooleanNetwork> {
    f.components().ensure_same(spec.components())?;
    Ok(BooleanNetwork::from_parts_unchecked(
        spec.free_components(),
        sub_table(f, spec.free, spec.fixed),
    ))
}

/// `f^{iα}`: fix component `label` to `value`.
pub fn immediate_subnetwork(f: &BooleanNetwork, label: &str, value: bool) -> Result<BooleanNetwork> {
    let spec = SubnetworkSpec::immediate(f.components(), label, value)?;
    induced_subnetwork(f, &spec)
}

/// All specs in search order: increasing `|I|`, then `I` lexicographically, then `z`
/// lexicographically in its textual form.
pub fn subnetwork_specs(components: &Components, include_self: bool) -> impl Iterator<Item = SubnetworkSpec> + '_ {
    let n = components.len();
    let full = components.full_mask();
    let top = if include_self { n } else { n.saturating_sub(1) };
    (1..=top).flat_map(move |k| {
        (0..n).combinations(k).flat_map(move |combo| {
            let free: u32 = combo.iter().map(|&i| 1u32 << i).sum();
            let outside = full & !free;
            let m = outside.count_ones();
            (0..1u32 << m).map(move |t| {
                // leftmost fixed component is the most significant digit of `t`
                let z = if m == 0 { 0 } else { t.reverse_bits() >> (32 - m) };
                SubnetworkSpec {
                    components: components.clone(),
                    free,
                    fixed: deposit(z, outside),
                }
            })
        })
    })
}

/// Every subnetwork of `f`, optionally including `f` itself, in search order.
pub fn subnetworks(
    f: &BooleanNetwork,
    include_self: bool,
) -> impl Iterator<Item = (SubnetworkSpec, BooleanNetwork)> + '_ {
    subnetwork_specs(f.components(), include_self).map(move |spec| {
        let h = induced_subnetwork(f, &spec).expect("spec built from f's components");
        (spec, h)
    })
}

/// `3^n − 2^n`, the number of subnetworks of a width-`n` network.
pub fn subnetwork_count(n: usize) -> u64 {
    3u64.pow(n as u32) - (1u64 << n)
}

/// First spec (in search order) whose subnetwork satisfies `pred`.
pub fn find_subnetwork(
    f: &BooleanNetwork,
    include_self: bool,
    mut pred: impl FnMut(&BooleanNetwork) -> bool,
) -> Option<SubnetworkSpec> {
    subnetworks(f, include_self).find_map(|(spec, h)| pred(&h).then_some(spec))
}

/// Smallest even- or odd-self-dual subnetwork, if any.
pub fn find_eosd_subnetwork(f: &BooleanNetwork) -> Option<SubnetworkSpec> {
    find_subnetwork(f, true, |h| h.eosd_class() != EosdClass::Neither)
}

/// True when `f` satisfies `pred` and no strict subnetwork does.
pub fn is_critical_for(f: &BooleanNetwork, pred: impl Fn(&BooleanNetwork) -> bool) -> bool {
    pred(f) && subnetworks(f, false).all(|(_, h)| !pred(&h))
}

/// Fixed-point counts of every subnetwork of one network.
///
/// Counts are indexed by a ternary key per subcube (digit 2 for a free
/// component, otherwise the fixed bit) and filled in one pass over the
/// conjugate: `x` is a fixed point of the subnetwork `(I, x_{-I})` exactly
/// when `f̃(x)` vanishes on `I`.
#[derive(Clone, Debug)]
pub struct FixedPointProfile {
    width: usize,
    ternary: Vec<u32>,
    counts: Vec<u32>,
}

impl FixedPointProfile {
    pub fn new(f: &BooleanNetwork) -> Result<Self> {
        let n = f.width();
        if n > MAX_CENSUS_WIDTH {
            return Err(Error::WidthCap {
                width: n,
                cap: MAX_CENSUS_WIDTH,
                what: "subnetwork census",
            });
        }
        let full = full_mask(n);
        let mut ternary = vec![0u32; 1 << n];
        for mask in 1..1usize << n {
            let low = mask.trailing_zeros();
            ternary[mask] = ternary[mask & (mask - 1)] + 3u32.pow(low);
        }
        let mut counts = vec![0u32; 3usize.pow(n as u32)];
        for x in 0..1u32 << n {
            let allowed = !f.eval_conjugate(x) & full;
            let mut free = allowed;
            while free != 0 {
                let key = 2 * ternary[free as usize] + ternary[(x & !free) as usize];
                counts[key as usize] += 1;
                free = (free - 1) & allowed;
            }
        }
        Ok(FixedPointProfile {
            width: n,
            ternary,
            counts,
        })
    }

    #[inline]
    fn key(&self, free: u32, fixed: u32) -> usize {
        (2 * self.ternary[free as usize] + self.ternary[(fixed & !free) as usize]) as usize
    }

    /// Fixed points of the subnetwork `(free, fixed)`.
    pub fn count(&self, free: u32, fixed: u32) -> u32 {
        self.counts[self.key(free, fixed)]
    }

    pub fn count_spec(&self, spec: &SubnetworkSpec) -> u32 {
        self.count(spec.free_mask(), spec.fixed_code())
    }

    /// Fixed points of the network itself.
    pub fn whole(&self) -> u32 {
        self.count(full_mask(self.width), 0)
    }

    /// Visits `(free, fixed, count)` for every subnetwork, optionally excluding the whole network.
    pub fn for_each(&self, include_self: bool, mut visit: impl FnMut(u32, u32, u32)) {
        let full = full_mask(self.width);
        for free in 1..=full {
            if free == full && !include_self {
                continue;
            }
            let outside = full & !free;
            let mut z = outside;
            loop {
                visit(free, z, self.count(free, z));
                if z == 0 {
                    break;
                }
                z = (z - 1) & outside;
            }
        }
    }

    /// `(min, max)` fixed-point counts, or `None` when there is nothing to range over.
    pub fn range(&self, include_self: bool) -> Option<(u32, u32)> {
        let mut out: Option<(u32, u32)> = None;
        self.for_each(include_self, |_, _, c| {
            out = Some(match out {
                None => (c, c),
                Some((lo, hi)) => (lo.min(c), hi.max(c)),
            })
        });
        out
    }
}

/// Min and max number of fixed points over all `3^n − 2^n` subnetworks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Census {
    pub min: u32,
    pub max: u32,
}

impl Census {
    /// Every subnetwork has exactly one fixed point.
    pub fn all_unique(&self) -> bool {
        self.min == 1 && self.max == 1
    }
}

pub fn all_subnetworks_fixed_point_census(f: &BooleanNetwork) -> Result<Census> {
    let (min, max) = FixedPointProfile::new(f)?
        .range(true)
        .expect("a network is its own subnetwork");
    Ok(Census { min, max })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CriticalityReport {
    pub two_critical: bool,
    pub zero_critical: bool,
    pub fixed_point_count: u32,
    /// `(min, max)` fixed-point counts over strict subnetworks; `None` for width 1.
    pub strict_subnetwork_fp_profile: Option<(u32, u32)>,
}

impl CriticalityReport {
    pub fn from_profile(profile: &FixedPointProfile) -> Self {
        let count = profile.whole();
        let strict = profile.range(false);
        let two_critical = count >= 2 && strict.is_none_or(|(_, hi)| hi <= 1);
        let zero_critical = count == 0 && strict.is_none_or(|(lo, _)| lo >= 1);
        CriticalityReport {
            two_critical,
            zero_critical,
            fixed_point_count: count,
            strict_subnetwork_fp_profile: strict,
        }
    }

    pub fn label(&self) -> &'static str {
        match (self.two_critical, self.zero_critical) {
            (true, _) => "2-critical",
            (_, true) => "0-critical",
            _ => "none",
        }
    }
}

pub fn criticality(f: &BooleanNetwork) -> Result<CriticalityReport> {
    Ok(CriticalityReport::from_profile(&FixedPointProfile::new(f)?))
}

/// Closed properties whose smallest forbidden sets are computed by [`minimal_forbidden_set`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ForbiddenProperty {
    /// Every subnetwork has at most one fixed point.
    AtMostOne,
    /// Every subnetwork has at least one fixed point.
    AtLeastOne,
    /// Every subnetwork has exactly one fixed point.
    ExactlyOne,
}

impl ForbiddenProperty {
    /// Whether a single network with `count` fixed points satisfies the local condition.
    pub fn holds_for_count(self, count: u32) -> bool {
        match self {
            ForbiddenProperty::AtMostOne => count <= 1,
            ForbiddenProperty::AtLeastOne => count >= 1,
            ForbiddenProperty::ExactlyOne => count == 1,
        }
    }

    /// Whether every subnetwork of `f` satisfies the property.
    pub fn holds(self, f: &BooleanNetwork) -> bool {
        subnetworks(f, true).all(|(_, h)| self.holds_for_count(h.fixed_point_count() as u32))
    }
}

/// True when `f` is critical for the negation of `property`, using a precomputed profile.
pub fn is_critical_for_negation(property: ForbiddenProperty, profile: &FixedPointProfile) -> bool {
    if property.holds_for_count(profile.whole()) {
        return false;
    }
    let mut ok = true;
    profile.for_each(false, |_, _, c| ok &= property.holds_for_count(c));
    ok
}

/// All networks of width `1..=n` on components `1..=k` that are critical for the
/// negation of `property`, i.e. the smallest forbidden set restricted to width `n`.
pub fn minimal_forbidden_set(property: ForbiddenProperty, n: usize) -> Result<Vec<BooleanNetwork>> {
    if n > MAX_ENUMERATION_WIDTH {
        return Err(Error::WidthCap {
            width: n,
            cap: MAX_ENUMERATION_WIDTH,
            what: "minimal forbidden sets",
        });
    }
    let mut out = Vec::new();
    for k in 1..=n {
        let comps = Components::range(k)?;
        for f in enumerate_networks(&comps)? {
            let profile = FixedPointProfile::new(&f)?;
            if is_critical_for_negation(property, &profile) {
                out.push(f);
            }
        }
    }
    Ok(out)
}

/// Human-readable listing of a subnetwork table, one `h_i = …` row per input.
pub fn describe(spec: &SubnetworkSpec, h: &BooleanNetwork) -> String {
    let k = h.width();
    let mut rows = Vec::new();
    for y in 0..1u32 << k {
        rows.push(format!("{}->{}", render_bits(y, k), render_bits(h.eval(y), k)));
    }
    format!("{spec}: {}", rows.join(" "))
}

//! The algebra of finite-support functions `X → T` with pointwise truncated
//! subtraction, the vanishing-set Galois connection between subsets of `X`
//! and sets of functions, and the symbolic ideal algebra `S ↦ V(S)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::algebra::{CayleyTable, FiniteCbck};
use crate::bitset::BitSet;
use crate::chain::{annihilator_exponent, chain_pow_diff, ChainSpec, ChainValue};
use crate::error::{Error, Result};

/// Default bound on the number of elements of a materialized algebra.
pub const DEFAULT_MATERIALIZATION_CAP: usize = 4096;

/// A finite ordered set of named points. Declaration order is the order used
/// by every enumeration and serialization.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Universe {
    points: Vec<String>,
    is_abstract: bool,
}

impl Universe {
    pub fn new<I, S>(points: I) -> Result<Arc<Universe>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let points: Vec<String> = points.into_iter().map(Into::into).collect();
        let mut seen = HashMap::new();
        for (i, p) in points.iter().enumerate() {
            if p.is_empty() {
                return Err(Error::Parse("empty point identifier".into()));
            }
            if seen.insert(p.as_str(), i).is_some() {
                return Err(Error::Parse(format!("duplicate point `{p}`")));
            }
        }
        Ok(Arc::new(Universe {
            points,
            is_abstract: false,
        }))
    }

    /// An anonymous universe `x0, …, x(n−1)` for purely combinatorial checks.
    pub fn abstract_of_size(n: usize) -> Arc<Universe> {
        Arc::new(Universe {
            points: (0..n).map(|i| format!("x{i}")).collect(),
            is_abstract: true,
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn is_abstract(&self) -> bool {
        self.is_abstract
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn name(&self, point: usize) -> &str {
        &self.points[point]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.points
            .iter()
            .position(|p| p == name)
            .ok_or_else(|| Error::UnknownPoint(name.to_string()))
    }
}

fn same_universe(a: &Arc<Universe>, b: &Arc<Universe>) -> Result<()> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(Error::UniverseMismatch)
    }
}

/// A subset of a universe.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointSet {
    universe: Arc<Universe>,
    members: BitSet,
}

impl PointSet {
    pub fn empty(universe: &Arc<Universe>) -> PointSet {
        PointSet {
            universe: universe.clone(),
            members: BitSet::empty(universe.len()),
        }
    }

    pub fn full(universe: &Arc<Universe>) -> PointSet {
        PointSet {
            universe: universe.clone(),
            members: BitSet::full(universe.len()),
        }
    }

    pub fn from_names<'a, I: IntoIterator<Item = &'a str>>(
        universe: &Arc<Universe>,
        names: I,
    ) -> Result<PointSet> {
        let mut members = BitSet::empty(universe.len());
        for name in names {
            members.insert(universe.index_of(name)?);
        }
        Ok(PointSet {
            universe: universe.clone(),
            members,
        })
    }

    pub fn from_bits(universe: &Arc<Universe>, members: BitSet) -> PointSet {
        assert_eq!(
            members.universe_len(),
            universe.len(),
            "bit set width differs from universe"
        );
        PointSet {
            universe: universe.clone(),
            members,
        }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn bits(&self) -> &BitSet {
        &self.members
    }

    pub fn contains(&self, point: usize) -> bool {
        self.members.contains(point)
    }

    pub fn len(&self) -> usize {
        self.members.count()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    pub fn complement(&self) -> PointSet {
        PointSet {
            universe: self.universe.clone(),
            members: self.members.complement(),
        }
    }

    pub fn union(&self, other: &PointSet) -> Result<PointSet> {
        same_universe(&self.universe, &other.universe)?;
        Ok(PointSet {
            universe: self.universe.clone(),
            members: self.members.union(&other.members),
        })
    }

    pub fn intersection(&self, other: &PointSet) -> Result<PointSet> {
        same_universe(&self.universe, &other.universe)?;
        Ok(PointSet {
            universe: self.universe.clone(),
            members: self.members.intersection(&other.members),
        })
    }

    pub fn is_subset(&self, other: &PointSet) -> Result<bool> {
        same_universe(&self.universe, &other.universe)?;
        Ok(self.members.is_subset(&other.members))
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.iter().map(|p| self.universe.name(p)).collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

/// A finite-support function `X → T`. Only non-zero values are stored, so
/// structural equality is function equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseFunction {
    spec: ChainSpec,
    universe: Arc<Universe>,
    entries: BTreeMap<usize, ChainValue>,
}

impl SparseFunction {
    /// The zero function.
    pub fn zero(spec: ChainSpec, universe: &Arc<Universe>) -> SparseFunction {
        SparseFunction {
            spec,
            universe: universe.clone(),
            entries: BTreeMap::new(),
        }
    }

    /// Builds a function from `(point index, value)` pairs; zero values are dropped.
    pub fn from_values<I>(
        spec: ChainSpec,
        universe: &Arc<Universe>,
        values: I,
    ) -> Result<SparseFunction>
    where
        I: IntoIterator<Item = (usize, ChainValue)>,
    {
        let mut entries = BTreeMap::new();
        for (point, value) in values {
            if point >= universe.len() {
                return Err(Error::UnknownPoint(format!("#{point}")));
            }
            spec.check(&value)?;
            if value.is_zero() {
                entries.remove(&point);
            } else {
                entries.insert(point, value);
            }
        }
        Ok(SparseFunction {
            spec,
            universe: universe.clone(),
            entries,
        })
    }

    /// The function equal to `value` at `point` and zero elsewhere.
    pub fn indicator(
        spec: ChainSpec,
        universe: &Arc<Universe>,
        point: usize,
        value: ChainValue,
    ) -> Result<SparseFunction> {
        Self::from_values(spec, universe, [(point, value)])
    }

    /// Parses a literal such as `{"a": "3", "b": "1/2"}`.
    pub fn from_literal(
        spec: ChainSpec,
        universe: &Arc<Universe>,
        literal: &str,
    ) -> Result<SparseFunction> {
        let raw: BTreeMap<String, String> = serde_json::from_str(literal)?;
        let mut values = Vec::with_capacity(raw.len());
        for (name, text) in &raw {
            values.push((universe.index_of(name)?, spec.parse_value(text)?));
        }
        Self::from_values(spec, universe, values)
    }

    /// Literal form with keys in universe order, e.g. `{"a":"3","b":"1/2"}`.
    pub fn to_literal(&self) -> String {
        let body: Vec<String> = self
            .entries
            .iter()
            .map(|(&p, v)| {
                let key = serde_json::to_string(self.universe.name(p)).expect("string serializes");
                format!("{key}:\"{v}\"")
            })
            .collect();
        format!("{{{}}}", body.join(","))
    }

    pub fn spec(&self) -> ChainSpec {
        self.spec
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn value_at(&self, point: usize) -> ChainValue {
        self.entries
            .get(&point)
            .cloned()
            .unwrap_or_else(|| self.spec.zero())
    }

    /// Non-zero values in universe order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, &ChainValue)> {
        self.entries.iter().map(|(&p, v)| (p, v))
    }

    fn compatible(&self, other: &SparseFunction) -> Result<()> {
        same_universe(&self.universe, &other.universe)?;
        if self.spec != other.spec {
            return Err(Error::SpecMismatch {
                spec: self.spec.to_string(),
                value: format!("function over {}", other.spec),
            });
        }
        Ok(())
    }
}

impl fmt::Display for SparseFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}

/// Pointwise `f·g`.
pub fn fs_diff(f: &SparseFunction, g: &SparseFunction) -> Result<SparseFunction> {
    fs_pow_diff(f, g, 1)
}

/// Pointwise `f·gⁿ`. Only points in `supp(f)` can be non-zero in the result.
pub fn fs_pow_diff(f: &SparseFunction, g: &SparseFunction, n: u64) -> Result<SparseFunction> {
    f.compatible(g)?;
    let mut entries = BTreeMap::new();
    for (&p, v) in &f.entries {
        let rest = chain_pow_diff(&f.spec, v, &g.value_at(p), n)?;
        if !rest.is_zero() {
            entries.insert(p, rest);
        }
    }
    Ok(SparseFunction {
        spec: f.spec,
        universe: f.universe.clone(),
        entries,
    })
}

/// Pointwise meet, the minimum of `f(x)` and `g(x)` at each point.
pub fn fs_meet(f: &SparseFunction, g: &SparseFunction) -> Result<SparseFunction> {
    f.compatible(g)?;
    let mut entries = BTreeMap::new();
    for (&p, v) in &f.entries {
        if let Some(w) = g.entries.get(&p) {
            let low = if f.spec.compare(v, w)?.is_le() { v } else { w };
            entries.insert(p, low.clone());
        }
    }
    let meet = SparseFunction {
        spec: f.spec,
        universe: f.universe.clone(),
        entries,
    };
    debug_assert_eq!(
        meet,
        fs_diff(f, &fs_diff(f, g)?)?,
        "pointwise minimum differs from f·(f·g)"
    );
    Ok(meet)
}

pub fn support(f: &SparseFunction) -> PointSet {
    PointSet::from_bits(
        &f.universe,
        BitSet::from_indices(f.universe.len(), f.entries.keys().copied()),
    )
}

/// `f ∈ V(S)`: `f` vanishes on every point of `S`.
pub fn v_membership(f: &SparseFunction, s: &PointSet) -> Result<bool> {
    same_universe(&f.universe, &s.universe)?;
    Ok(f.entries.keys().all(|&p| !s.contains(p)))
}

/// `P(G)`: the points where every function of `G` vanishes.
pub fn p_of(universe: &Arc<Universe>, functions: &[SparseFunction]) -> Result<PointSet> {
    let mut hit = BitSet::empty(universe.len());
    for g in functions {
        same_universe(universe, &g.universe)?;
        for &p in g.entries.keys() {
            hit.insert(p);
        }
    }
    Ok(PointSet::from_bits(universe, hit.complement()))
}

/// Result of [`annihilate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Annihilation {
    /// One exponent per witness, in the order given.
    pub exponents: Vec<u64>,
    pub residual: SparseFunction,
}

/// Drives `f` to zero by subtracting each witness `gᵢ` exactly `nᵢ` times,
/// where `nᵢ` is the least exponent annihilating `f(xᵢ)` by `gᵢ(xᵢ)`.
///
/// Exponents are computed from the original values of `f`, not from the
/// running residual; cross-effects between witnesses only lower values
/// further. Every point of `supp(f)` must be covered by some witness.
pub fn annihilate(
    f: &SparseFunction,
    witnesses: &[(usize, SparseFunction)],
) -> Result<Annihilation> {
    for (point, g) in witnesses {
        f.compatible(g)?;
        if *point >= f.universe.len() {
            return Err(Error::UnknownPoint(format!("#{point}")));
        }
        if g.value_at(*point).is_zero() {
            return Err(Error::BadWitness(f.universe.name(*point).to_string()));
        }
    }
    if let Some(&gap) = f
        .entries
        .keys()
        .find(|&&p| witnesses.iter().all(|(q, _)| *q != p))
    {
        return Err(Error::WitnessGap(f.universe.name(gap).to_string()));
    }

    let mut exponents = Vec::with_capacity(witnesses.len());
    let mut residual = f.clone();
    for (point, g) in witnesses {
        let n = annihilator_exponent(&f.spec, &f.value_at(*point), &g.value_at(*point))?
            .expect("witness is non-zero at its point");
        residual = fs_pow_diff(&residual, g, n)?;
        exponents.push(n);
    }
    assert!(residual.is_zero(), "annihilation left residual {residual}");
    Ok(Annihilation {
        exponents,
        residual,
    })
}

/// The ideal `V(S)` of the finite-support algebra, named by its vanishing set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymbolicIdeal {
    vanishing: PointSet,
}

impl SymbolicIdeal {
    pub fn new(vanishing: PointSet) -> SymbolicIdeal {
        SymbolicIdeal { vanishing }
    }

    /// `V(∅)`, the whole algebra.
    pub fn whole(universe: &Arc<Universe>) -> SymbolicIdeal {
        SymbolicIdeal::new(PointSet::empty(universe))
    }

    /// `V(X) = {0}`.
    pub fn zero_ideal(universe: &Arc<Universe>) -> SymbolicIdeal {
        SymbolicIdeal::new(PointSet::full(universe))
    }

    pub fn vanishing_set(&self) -> &PointSet {
        &self.vanishing
    }

    pub fn universe(&self) -> &Arc<Universe> {
        self.vanishing.universe()
    }

    pub fn contains(&self, f: &SparseFunction) -> Result<bool> {
        v_membership(f, &self.vanishing)
    }

    pub fn label(&self) -> String {
        format!("V({})", self.vanishing)
    }
}

impl fmt::Display for SymbolicIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// `V(Y) ∩ V(Z) = V(Y ∪ Z)`.
pub fn symbolic_meet(a: &SymbolicIdeal, b: &SymbolicIdeal) -> Result<SymbolicIdeal> {
    Ok(SymbolicIdeal::new(a.vanishing.union(&b.vanishing)?))
}

/// `V(Y) ∨ V(Z) = V(Y ∩ Z)`.
pub fn symbolic_join(a: &SymbolicIdeal, b: &SymbolicIdeal) -> Result<SymbolicIdeal> {
    Ok(SymbolicIdeal::new(a.vanishing.intersection(&b.vanishing)?))
}

/// The lattice complement `V(Sᶜ)`.
pub fn symbolic_complement(a: &SymbolicIdeal) -> SymbolicIdeal {
    SymbolicIdeal::new(a.vanishing.complement())
}

/// A function lying in exactly one of `a`, `b`, or `None` when `a = b`.
///
/// Picks the first point `y` of the symmetric difference of the vanishing
/// sets and returns the indicator of `y` with value `1`.
pub fn distinguishing_function(
    spec: ChainSpec,
    a: &SymbolicIdeal,
    b: &SymbolicIdeal,
) -> Result<Option<SparseFunction>> {
    same_universe(a.universe(), b.universe())?;
    let diff = a
        .vanishing
        .bits()
        .difference(b.vanishing.bits())
        .union(&b.vanishing.bits().difference(a.vanishing.bits()));
    let first = diff.iter().next();
    match first {
        None => Ok(None),
        Some(y) => Ok(Some(SparseFunction::indicator(
            spec,
            a.universe(),
            y,
            spec.unit(),
        )?)),
    }
}

/// Certificate that `f` lies in the join `V(Y) ∨ V(Z)`.
///
/// If `f` vanishes on `Y ∩ Z`, returns one witness per support point `x`:
/// the indicator of `x` with value `1`, which lies in `V(Y)` when `x ∉ Y` and
/// in `V(Z)` otherwise. Feeding these to [`annihilate`] reduces `f` to zero,
/// so `f` is in the ideal generated by `V(Y) ∪ V(Z)`. Returns `None` when `f`
/// does not vanish on `Y ∩ Z`.
pub fn join_certificate(
    f: &SparseFunction,
    a: &SymbolicIdeal,
    b: &SymbolicIdeal,
) -> Result<Option<Vec<(usize, SparseFunction)>>> {
    let common = a.vanishing.intersection(&b.vanishing)?;
    if !v_membership(f, &common)? {
        return Ok(None);
    }
    f.entries
        .keys()
        .map(|&x| {
            Ok((
                x,
                SparseFunction::indicator(f.spec, &f.universe, x, f.spec.unit())?,
            ))
        })
        .collect::<Result<Vec<_>>>()
        .map(Some)
}

/// `T_h^X` materialized as an operation table.
///
/// Element `f` has index `Σ f(xᵢ)·(h+1)ⁱ`: the first point of the universe
/// is the least significant digit.
#[derive(Clone, Debug)]
pub struct FsAlgebra {
    universe: Arc<Universe>,
    height: u32,
    algebra: FiniteCbck,
}

impl FsAlgebra {
    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn spec(&self) -> ChainSpec {
        ChainSpec::Finite(self.height)
    }

    pub fn algebra(&self) -> &FiniteCbck {
        &self.algebra
    }

    pub fn size(&self) -> usize {
        self.algebra.size()
    }

    fn radix(&self) -> usize {
        self.height as usize + 1
    }

    pub fn decode(&self, index: usize) -> SparseFunction {
        assert!(index < self.size(), "element out of range");
        let mut rest = index;
        let values = (0..self.universe.len()).map(|p| {
            let digit = rest % self.radix();
            rest /= self.radix();
            (p, ChainValue::Level(digit as u32))
        });
        SparseFunction::from_values(self.spec(), &self.universe, values.collect::<Vec<_>>())
            .expect("digits are within the chain")
    }

    pub fn encode(&self, f: &SparseFunction) -> Result<usize> {
        same_universe(&self.universe, &f.universe)?;
        if f.spec != self.spec() {
            return Err(Error::SpecMismatch {
                spec: self.spec().to_string(),
                value: format!("function over {}", f.spec),
            });
        }
        let mut index = 0;
        for (p, v) in f.entries() {
            let ChainValue::Level(level) = v else {
                unreachable!("spec checked")
            };
            index += *level as usize * self.radix().pow(p as u32);
        }
        Ok(index)
    }

    /// `V(S)` as a set of element indices.
    pub fn vanishing_ideal(&self, s: &PointSet) -> Result<BitSet> {
        same_universe(&self.universe, s.universe())?;
        let mut members = BitSet::empty(self.size());
        for i in 0..self.size() {
            if v_membership(&self.decode(i), s)? {
                members.insert(i);
            }
        }
        Ok(members)
    }
}

/// Materializes `T_h^X` when `(h+1)^|X| ≤ cap`.
pub fn fs_as_finite_algebra(
    universe: &Arc<Universe>,
    height: u32,
    cap: usize,
) -> Result<FsAlgebra> {
    assert!(height >= 1, "chain height must be positive");
    let radix = height as u128 + 1;
    let needed = (0..universe.len())
        .try_fold(1u128, |acc, _| acc.checked_mul(radix))
        .unwrap_or(u128::MAX);
    if needed > cap as u128 {
        return Err(Error::CapExceeded {
            what: "materialized algebra",
            needed,
            cap: cap as u128,
        });
    }
    let size = needed as usize;
    let radix = radix as usize;
    let k = universe.len();
    let digits: Vec<Vec<usize>> = (0..size)
        .map(|mut i| {
            (0..k)
                .map(|_| {
                    let d = i % radix;
                    i /= radix;
                    d
                })
                .collect()
        })
        .collect();
    let table = CayleyTable::from_fn(size, 0, |x, y| {
        digits[x]
            .iter()
            .zip(&digits[y])
            .rev()
            .fold(0, |acc, (a, b)| acc * radix + a.saturating_sub(*b))
    })?;
    let algebra = FiniteCbck::new(table)?;
    Ok(FsAlgebra {
        universe: universe.clone(),
        height,
        algebra,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Arc<Universe> {
        Universe::new(["a", "b"]).unwrap()
    }

    fn nat_fn(u: &Arc<Universe>, lit: &str) -> SparseFunction {
        SparseFunction::from_literal(ChainSpec::Naturals, u, lit).unwrap()
    }

    #[test]
    fn pointwise_difference() {
        let u = ab();
        let f = nat_fn(&u, r#"{"a":"3","b":"1"}"#);
        let zero = SparseFunction::zero(ChainSpec::Naturals, &u);
        assert_eq!(fs_diff(&f, &zero).unwrap(), f);
        assert_eq!(
            fs_diff(&f, &nat_fn(&u, r#"{"a":"1"}"#)).unwrap(),
            nat_fn(&u, r#"{"a":"2","b":"1"}"#)
        );
        assert!(fs_diff(
            &nat_fn(&u, r#"{"a":"1"}"#),
            &nat_fn(&u, r#"{"a":"4","b":"2"}"#)
        )
        .unwrap()
        .is_zero());
    }

    #[test]
    fn pointwise_meet() {
        let u = ab();
        let f = nat_fn(&u, r#"{"a":"3","b":"1"}"#);
        assert_eq!(fs_meet(&f, &f).unwrap(), f);
        assert_eq!(
            fs_meet(&f, &nat_fn(&u, r#"{"a":"1","b":"2"}"#)).unwrap(),
            nat_fn(&u, r#"{"a":"1","b":"1"}"#)
        );
        assert!(
            fs_meet(&nat_fn(&u, r#"{"a":"3"}"#), &nat_fn(&u, r#"{"b":"2"}"#))
                .unwrap()
                .is_zero()
        );
    }

    #[test]
    fn mismatches_are_reported() {
        let f = nat_fn(&ab(), r#"{"a":"3"}"#);
        let other = Universe::new(["a", "c"]).unwrap();
        assert!(matches!(
            fs_diff(&f, &nat_fn(&other, r#"{"a":"1"}"#)),
            Err(Error::UniverseMismatch)
        ));
        let q = SparseFunction::zero(ChainSpec::NonnegRationals, &ab());
        assert!(matches!(fs_diff(&f, &q), Err(Error::SpecMismatch { .. })));
        assert!(matches!(
            SparseFunction::from_literal(ChainSpec::Naturals, &ab(), r#"{"z":"1"}"#),
            Err(Error::UnknownPoint(_))
        ));
    }

    #[test]
    fn supports_and_vanishing_sets() {
        let u = ab();
        let q = ChainSpec::NonnegRationals;
        assert!(support(&SparseFunction::zero(q, &u)).is_empty());
        let f = SparseFunction::from_literal(q, &u, r#"{"a":"2","b":"1/2"}"#).unwrap();
        assert_eq!(support(&f).to_string(), "{a,b}");
        let g = nat_fn(&u, r#"{"a":"1","b":"0"}"#);
        assert_eq!(support(&g).to_string(), "{a}");

        let b = PointSet::from_names(&u, ["b"]).unwrap();
        assert!(v_membership(&SparseFunction::zero(ChainSpec::Naturals, &u), &b).unwrap());
        assert!(v_membership(&g, &b).unwrap());
        assert!(!v_membership(&g, &PointSet::full(&u)).unwrap());
    }

    #[test]
    fn vanishing_points() {
        let u = ab();
        let zero = SparseFunction::zero(ChainSpec::Naturals, &u);
        assert_eq!(p_of(&u, &[zero]).unwrap().to_string(), "{a,b}");
        assert_eq!(
            p_of(&u, &[nat_fn(&u, r#"{"a":"1"}"#)]).unwrap().to_string(),
            "{b}"
        );
        let abc = Universe::new(["a", "b", "c"]).unwrap();
        let fs = [nat_fn(&abc, r#"{"a":"1"}"#), nat_fn(&abc, r#"{"b":"2"}"#)];
        assert_eq!(p_of(&abc, &fs).unwrap().to_string(), "{c}");
        assert_eq!(p_of(&abc, &[]).unwrap().len(), 3);
    }

    #[test]
    fn annihilation_examples() {
        let a = Universe::new(["a"]).unwrap();
        let zero = SparseFunction::zero(ChainSpec::Naturals, &a);
        let done = annihilate(&zero, &[]).unwrap();
        assert!(done.exponents.is_empty() && done.residual.is_zero());

        let done = annihilate(
            &nat_fn(&a, r#"{"a":"5"}"#),
            &[(0, nat_fn(&a, r#"{"a":"2"}"#))],
        )
        .unwrap();
        assert_eq!(done.exponents, vec![3]);
        assert!(done.residual.is_zero());

        let u = ab();
        let f = nat_fn(&u, r#"{"a":"2","b":"3"}"#);
        let witnesses = [
            (0, nat_fn(&u, r#"{"a":"1","b":"5"}"#)),
            (1, nat_fn(&u, r#"{"b":"1"}"#)),
        ];
        let done = annihilate(&f, &witnesses).unwrap();
        assert_eq!(done.exponents, vec![2, 3]);
        assert!(done.residual.is_zero());
    }

    #[test]
    fn annihilation_errors() {
        let u = ab();
        let f = nat_fn(&u, r#"{"a":"2","b":"3"}"#);
        assert!(
            matches!(annihilate(&f, &[(0, nat_fn(&u, r#"{"a":"1"}"#))]), Err(Error::WitnessGap(p)) if p == "b")
        );
        assert!(matches!(
            annihilate(&f, &[(0, nat_fn(&u, r#"{"b":"1"}"#)), (1, nat_fn(&u, r#"{"b":"1"}"#))]),
            Err(Error::BadWitness(p)) if p == "a"
        ));
    }

    #[test]
    fn symbolic_lattice_operations() {
        let u = ab();
        let va = SymbolicIdeal::new(PointSet::from_names(&u, ["a"]).unwrap());
        let vb = SymbolicIdeal::new(PointSet::from_names(&u, ["b"]).unwrap());
        assert_eq!(symbolic_meet(&SymbolicIdeal::whole(&u), &va).unwrap(), va);
        assert_eq!(symbolic_join(&va, &vb).unwrap(), SymbolicIdeal::whole(&u));
        assert_eq!(symbolic_complement(&va), vb);
        assert_eq!(va.label(), "V({a})");
        let witness = distinguishing_function(ChainSpec::Naturals, &va, &vb)
            .unwrap()
            .unwrap();
        assert_ne!(
            va.contains(&witness).unwrap(),
            vb.contains(&witness).unwrap()
        );
        assert!(distinguishing_function(ChainSpec::Naturals, &va, &va)
            .unwrap()
            .is_none());
    }

    #[test]
    fn join_certificates() {
        let u = ab();
        let va = SymbolicIdeal::new(PointSet::from_names(&u, ["a"]).unwrap());
        let vb = SymbolicIdeal::new(PointSet::from_names(&u, ["b"]).unwrap());
        let f = nat_fn(&u, r#"{"a":"4","b":"7"}"#);
        let cert = join_certificate(&f, &va, &vb).unwrap().unwrap();
        assert!(cert
            .iter()
            .all(|(_, g)| va.contains(g).unwrap() || vb.contains(g).unwrap()));
        assert!(annihilate(&f, &cert).unwrap().residual.is_zero());
        assert!(join_certificate(&f, &va, &va).unwrap().is_none());
    }

    #[test]
    fn materializations() {
        let one = Universe::new(["a"]).unwrap();
        let c2 = fs_as_finite_algebra(&one, 1, DEFAULT_MATERIALIZATION_CAP).unwrap();
        assert_eq!(c2.algebra(), &crate::chain::chain_as_finite_algebra(1));

        let sq = fs_as_finite_algebra(&ab(), 1, DEFAULT_MATERIALIZATION_CAP).unwrap();
        assert_eq!(sq.size(), 4);
        let c2 = crate::chain::chain_as_finite_algebra(1);
        assert_eq!(sq.algebra(), &c2.product(&c2));

        let t2 = fs_as_finite_algebra(&ab(), 2, DEFAULT_MATERIALIZATION_CAP).unwrap();
        assert_eq!(t2.size(), 9);
        for i in t2.algebra().elements() {
            let f = t2.decode(i);
            assert_eq!(t2.encode(&f).unwrap(), i);
            for j in t2.algebra().elements() {
                assert_eq!(
                    t2.decode(t2.algebra().op(i, j)),
                    fs_diff(&f, &t2.decode(j)).unwrap()
                );
            }
        }

        let big = Universe::abstract_of_size(13);
        assert!(matches!(
            fs_as_finite_algebra(&big, 1, DEFAULT_MATERIALIZATION_CAP),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn literals_follow_universe_order() {
        let u = Universe::new(["b", "a"]).unwrap();
        let f = nat_fn(&u, r#"{"a":"1","b":"2"}"#);
        assert_eq!(f.to_literal(), r#"{"b":"2","a":"1"}"#);
        assert_eq!(
            SparseFunction::from_literal(ChainSpec::Naturals, &u, &f.to_literal()).unwrap(),
            f
        );
    }
}

//! The Burnside ring of compact orbispaces as a computational object: the
//! free abelian group on isomorphism classes of finite groups, with
//! multiplication induced by direct products, the characters χ_orb, χ_Q and
//! χ_{K(n)}, and the loop and p-typical shift operators.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::{Add, Neg, Sub};
use std::sync::RwLock;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::census::{self, DEFAULT_CENSUS_CAP};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::iso::{self, GroupFingerprint};
use crate::names;
use crate::rational::Rational;

/// Key of a basis class: an isomorphism class of finite groups, identified
/// with the first-seen representative registered in a [`BurnsideRing`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisId(u32);

/// An element of the Burnside ring: a finite integer combination of
/// isomorphism classes of finite groups. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BurnsideClass {
    terms: BTreeMap<BasisId, i64>,
}

impl BurnsideClass {
    pub fn zero() -> Self {
        BurnsideClass::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (BasisId, i64)> + '_ {
        self.terms.iter().map(|(&id, &c)| (id, c))
    }

    pub fn coefficient(&self, id: BasisId) -> i64 {
        self.terms.get(&id).copied().unwrap_or(0)
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn scale(&self, k: i64) -> BurnsideClass {
        if k == 0 {
            return BurnsideClass::zero();
        }
        BurnsideClass {
            terms: self.terms.iter().map(|(&id, &c)| (id, c * k)).collect(),
        }
    }

    fn add_term(&mut self, id: BasisId, coefficient: i64) {
        let entry = self.terms.entry(id).or_insert(0);
        *entry += coefficient;
        if *entry == 0 {
            self.terms.remove(&id);
        }
    }
}

impl Add for &BurnsideClass {
    type Output = BurnsideClass;
    fn add(self, rhs: &BurnsideClass) -> BurnsideClass {
        let mut out = self.clone();
        for (id, c) in rhs.terms() {
            out.add_term(id, c);
        }
        out
    }
}

impl Sub for &BurnsideClass {
    type Output = BurnsideClass;
    fn sub(self, rhs: &BurnsideClass) -> BurnsideClass {
        let mut out = self.clone();
        for (id, c) in rhs.terms() {
            out.add_term(id, -c);
        }
        out
    }
}

impl Neg for &BurnsideClass {
    type Output = BurnsideClass;
    fn neg(self) -> BurnsideClass {
        self.scale(-1)
    }
}

struct BasisEntry {
    group: FiniteGroup,
    name: String,
    order: u64,
}

#[derive(Default)]
struct Registry {
    entries: Vec<BasisEntry>,
    buckets: std::collections::HashMap<GroupFingerprint, Vec<u32>>,
    product_cache: std::collections::HashMap<(BasisId, BasisId), BasisId>,
}

/// The basis-key registry: an append-only table mapping isomorphism classes
/// of finite groups to canonical first-seen representatives.
///
/// Classes from different rings must not be mixed; all arithmetic on
/// [`BurnsideClass`] values is relative to the ring that created them.
pub struct BurnsideRing {
    registry: RwLock<Registry>,
}

impl Default for BurnsideRing {
    fn default() -> Self {
        BurnsideRing::new()
    }
}

/// Serialized form of one term of a class.
#[derive(Debug, Serialize, Deserialize)]
struct TermDto {
    group: String,
    coefficient: i64,
}

impl BurnsideRing {
    pub fn new() -> Self {
        BurnsideRing {
            registry: RwLock::new(Registry::default()),
        }
    }

    /// Registers a group, reducing it to the canonical representative of its
    /// isomorphism class: fingerprint bucket first, then isomorphism search
    /// within the bucket.
    pub fn register(&self, g: &FiniteGroup) -> BasisId {
        let fp = iso::fingerprint(g);
        {
            let registry = self.registry.read().unwrap();
            if let Some(bucket) = registry.buckets.get(&fp) {
                for &idx in bucket {
                    if iso::exists_isomorphism(g, &registry.entries[idx as usize].group) {
                        return BasisId(idx);
                    }
                }
            }
        }
        let name = g
            .name()
            .map(str::to_owned)
            .or_else(|| names::identify(g, &fp));
        let mut registry = self.registry.write().unwrap();
        // Re-check: another thread may have inserted while unlocked.
        if let Some(bucket) = registry.buckets.get(&fp) {
            for &idx in bucket {
                if iso::exists_isomorphism(g, &registry.entries[idx as usize].group) {
                    return BasisId(idx);
                }
            }
        }
        let idx = registry.entries.len() as u32;
        let name = name.unwrap_or_else(|| format!("G{}#{}", g.order(), idx));
        let group = if g.name().is_some() {
            g.clone()
        } else {
            g.clone().with_name(name.clone())
        };
        registry.entries.push(BasisEntry {
            group,
            name,
            order: g.order(),
        });
        registry.buckets.entry(fp).or_default().push(idx);
        BasisId(idx)
    }

    /// The class of a single group with coefficient one.
    pub fn class_of(&self, g: &FiniteGroup) -> BurnsideClass {
        let id = self.register(g);
        let mut terms = BTreeMap::new();
        terms.insert(id, 1);
        BurnsideClass { terms }
    }

    /// The multiplicative unit: the class of the trivial group.
    pub fn one(&self) -> BurnsideClass {
        self.class_of(&FiniteGroup::trivial())
    }

    pub fn representative(&self, id: BasisId) -> FiniteGroup {
        self.registry.read().unwrap().entries[id.0 as usize]
            .group
            .clone()
    }

    pub fn basis_name(&self, id: BasisId) -> String {
        self.registry.read().unwrap().entries[id.0 as usize]
            .name
            .clone()
    }

    pub fn basis_order(&self, id: BasisId) -> u64 {
        self.registry.read().unwrap().entries[id.0 as usize].order
    }

    fn terms_with_groups(&self, x: &BurnsideClass) -> Vec<(BasisId, i64, FiniteGroup)> {
        let registry = self.registry.read().unwrap();
        x.terms()
            .map(|(id, c)| (id, c, registry.entries[id.0 as usize].group.clone()))
            .collect()
    }

    /// Bilinear extension of `[G]·[H] = [G×H]`.
    pub fn multiply(&self, x: &BurnsideClass, y: &BurnsideClass) -> Result<BurnsideClass> {
        let xs = self.terms_with_groups(x);
        let ys = self.terms_with_groups(y);
        let mut out = BurnsideClass::zero();
        for (xid, xc, xg) in &xs {
            for (yid, yc, yg) in &ys {
                let cached = {
                    let registry = self.registry.read().unwrap();
                    registry.product_cache.get(&(*xid, *yid)).copied()
                };
                let pid = match cached {
                    Some(pid) => pid,
                    None => {
                        let product = xg.direct_product(yg)?;
                        let pid = self.register(&product);
                        self.registry
                            .write()
                            .unwrap()
                            .product_cache
                            .insert((*xid, *yid), pid);
                        pid
                    }
                };
                out.add_term(pid, xc * yc);
            }
        }
        Ok(out)
    }

    /// The orbifold Euler characteristic: `[G] ↦ 1/|G|`, extended linearly.
    pub fn chi_orb(&self, x: &BurnsideClass) -> Rational {
        let registry = self.registry.read().unwrap();
        let mut total = Rational::from_integer(BigInt::from(0));
        for (id, c) in x.terms() {
            let order = registry.entries[id.0 as usize].order;
            total += Rational::new(BigInt::from(c), BigInt::from(order));
        }
        total
    }

    /// The rational Euler characteristic: every basis class counts one.
    pub fn chi_q(&self, x: &BurnsideClass) -> i64 {
        x.terms().map(|(_, c)| c).sum()
    }

    /// The height-n Euler characteristic at the prime p, extended linearly
    /// from the tuple-census count on each basis group.
    pub fn chi_kn(&self, x: &BurnsideClass, p: u64, n: usize) -> Result<BigInt> {
        let mut total = BigInt::from(0);
        for (_, c, g) in self.terms_with_groups(x) {
            total += BigInt::from(c) * BigInt::from(census::chi_kn_finite(&g, p, n)?);
        }
        Ok(total)
    }

    /// The character `φ_K`: counts conjugacy classes of embeddings of `k`
    /// into each basis group, extended linearly.
    pub fn phi_k(&self, x: &BurnsideClass, k: &FiniteGroup) -> i64 {
        self.terms_with_groups(x)
            .iter()
            .map(|(_, c, g)| c * iso::monomorphism_classes(k, g) as i64)
            .sum()
    }

    /// The loop operator: `[G] ↦ Σ [C(g)]` over conjugacy classes of `G`.
    pub fn loop_op(&self, x: &BurnsideClass) -> BurnsideClass {
        let mut out = BurnsideClass::zero();
        for (_, c, g) in self.terms_with_groups(x) {
            for &rep in &g.conjugacy_classes().representatives() {
                let centralizer = g.centralizer_of_ids(&[rep]);
                let id = self.register(&centralizer);
                out.add_term(id, c);
            }
        }
        out
    }

    /// The p-typical shift: `[G] ↦ Σ [C⟨g₁,…,g_n⟩]` over orbits of commuting
    /// n-tuples of p-power-order elements.
    pub fn p_shift(&self, x: &BurnsideClass, p: u64, n: usize) -> Result<BurnsideClass> {
        self.p_shift_capped(x, p, n, DEFAULT_CENSUS_CAP)
    }

    pub fn p_shift_capped(
        &self,
        x: &BurnsideClass,
        p: u64,
        n: usize,
        cap: u64,
    ) -> Result<BurnsideClass> {
        let mut out = BurnsideClass::zero();
        for (_, c, g) in self.terms_with_groups(x) {
            let cen = census::census_naive_capped(&g, p, n, cap)?;
            for orbit in &cen.orbits {
                let id = self.register(&orbit.centralizer);
                out.add_term(id, c);
            }
        }
        Ok(out)
    }

    /// Renders a class as a signed combination of named basis classes.
    pub fn describe(&self, x: &BurnsideClass) -> String {
        if x.is_zero() {
            return "0".into();
        }
        let registry = self.registry.read().unwrap();
        let mut out = String::new();
        for (i, (id, c)) in x.terms().enumerate() {
            let name = &registry.entries[id.0 as usize].name;
            let magnitude = c.unsigned_abs();
            if i == 0 {
                if c < 0 {
                    out.push('-');
                }
            } else if c < 0 {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if magnitude != 1 {
                let _ = write!(out, "{magnitude}*");
            }
            let _ = write!(out, "[{name}]");
        }
        out
    }

    /// Serializes a class as JSON: a list of `{group, coefficient}` records
    /// where `group` is a parseable group spec.
    pub fn to_json(&self, x: &BurnsideClass) -> String {
        let registry = self.registry.read().unwrap();
        let terms: Vec<TermDto> = x
            .terms()
            .map(|(id, c)| {
                let entry = &registry.entries[id.0 as usize];
                TermDto {
                    group: names::spec_for(&entry.group),
                    coefficient: c,
                }
            })
            .collect();
        serde_json::to_string(&terms).expect("serializable")
    }

    /// Parses a class back from its JSON form.
    pub fn from_json(&self, text: &str) -> Result<BurnsideClass> {
        let terms: Vec<TermDto> = serde_json::from_str(text)
            .map_err(|e| Error::InvalidInput(format!("bad class JSON: {e}")))?;
        let mut out = BurnsideClass::zero();
        for term in terms {
            let g = names::parse_group(&term.group)?;
            let id = self.register(&g);
            out.add_term(id, term.coefficient);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::names::parse_group;
    use crate::rational::ratio;

    #[test]
    fn isomorphic_groups_share_a_key() {
        let ring = BurnsideRing::new();
        let a = ring.class_of(&parse_group("D12").unwrap());
        let b = ring.class_of(&parse_group("S3xC2").unwrap());
        assert_eq!(a, b);
        let c4 = ring.class_of(&parse_group("C4").unwrap());
        let v = ring.class_of(&parse_group("C2xC2").unwrap());
        assert_ne!(c4, v);
    }

    #[test]
    fn additive_laws() {
        let ring = BurnsideRing::new();
        let x = ring.class_of(&parse_group("C2").unwrap());
        let y = ring.class_of(&parse_group("D8").unwrap());
        assert!((&x - &x).is_zero());
        assert_eq!(&x + &x, x.scale(2));
        let z = &(&x + &y) - &y;
        assert_eq!(z, x);
        assert_eq!((-&x).coefficient(x.terms().next().unwrap().0), -1);
    }

    #[test]
    fn multiplication_follows_the_basis_rule() {
        let ring = BurnsideRing::new();
        let c2 = ring.class_of(&parse_group("C2").unwrap());
        let product = ring.multiply(&c2, &c2).unwrap();
        let v = ring.class_of(&parse_group("C2xC2").unwrap());
        assert_eq!(product, v);

        let one = ring.one();
        let d8 = ring.class_of(&parse_group("D8").unwrap());
        assert_eq!(ring.multiply(&one, &d8).unwrap(), d8);
    }

    #[test]
    fn chi_orb_values() {
        let ring = BurnsideRing::new();
        let d8 = ring.class_of(&parse_group("D8").unwrap());
        assert_eq!(ring.chi_orb(&d8), ratio(1, 8));

        // Tree class of an amalgam over C4 inside two D8's.
        let c4 = ring.class_of(&parse_group("C4").unwrap());
        let tree = &(&d8 + &d8) - &c4;
        assert_eq!(ring.chi_orb(&tree), ratio(0, 1));

        // C6 + C4 - C2 has orbifold characteristic −1/12.
        let cls = &(&ring.class_of(&parse_group("C6").unwrap())
            + &ring.class_of(&parse_group("C4").unwrap()))
            - &ring.class_of(&parse_group("C2").unwrap());
        assert_eq!(ring.chi_orb(&cls), ratio(-1, 12));
        assert_eq!(ring.chi_q(&cls), 1);
        assert_eq!(ring.chi_q(&BurnsideClass::zero()), 0);
    }

    #[test]
    fn chi_orb_is_multiplicative() {
        let ring = BurnsideRing::new();
        let s3 = ring.class_of(&parse_group("S3").unwrap());
        let c2 = ring.class_of(&parse_group("C2").unwrap());
        let product = ring.multiply(&s3, &c2).unwrap();
        assert_eq!(ring.chi_orb(&product), ratio(1, 12));
        assert_eq!(
            ring.chi_orb(&product),
            ring.chi_orb(&s3) * ring.chi_orb(&c2)
        );
    }

    #[test]
    fn chi_kn_on_the_modular_tree() {
        let ring = BurnsideRing::new();
        let cls = &(&ring.class_of(&parse_group("C6").unwrap())
            + &ring.class_of(&parse_group("C4").unwrap()))
            - &ring.class_of(&parse_group("C2").unwrap());
        for n in 1..=3u32 {
            assert_eq!(
                ring.chi_kn(&cls, 2, n as usize).unwrap(),
                BigInt::from(4u64.pow(n))
            );
            assert_eq!(
                ring.chi_kn(&cls, 3, n as usize).unwrap(),
                BigInt::from(3u64.pow(n))
            );
        }
        assert_eq!(ring.chi_kn(&cls, 2, 0).unwrap(), BigInt::from(1));
    }

    #[test]
    fn phi_values() {
        let ring = BurnsideRing::new();
        let s3 = ring.class_of(&parse_group("S3").unwrap());
        let trivial = parse_group("C1").unwrap();
        assert_eq!(ring.phi_k(&s3, &trivial), 1);
        assert_eq!(ring.phi_k(&s3, &parse_group("S3").unwrap()), 1);
        // No embeddings of a larger group.
        assert_eq!(ring.phi_k(&s3, &parse_group("D8").unwrap()), 0);
        // Same order, not isomorphic.
        assert_eq!(ring.phi_k(&s3, &parse_group("C6").unwrap()), 0);
    }

    #[test]
    fn loop_operator_basics() {
        let ring = BurnsideRing::new();
        let one = ring.one();
        assert_eq!(ring.loop_op(&one), one);

        let c2 = ring.class_of(&parse_group("C2").unwrap());
        assert_eq!(ring.loop_op(&c2), c2.scale(2));

        // χ_orb of the loop of a basis class is 1 (the class equation).
        for spec in ["S3", "D8", "Q8", "S4"] {
            let x = ring.class_of(&parse_group(spec).unwrap());
            assert_eq!(ring.chi_orb(&ring.loop_op(&x)), ratio(1, 1), "{spec}");
        }
    }

    #[test]
    fn shift_operator_basics() {
        let ring = BurnsideRing::new();
        let s4 = ring.class_of(&parse_group("S4").unwrap());
        assert_eq!(ring.p_shift(&s4, 2, 0).unwrap(), s4);
        // χ_Q of the shifted class equals χ_{K(n)} of the original.
        for n in 1..=2usize {
            let shifted = ring.p_shift(&s4, 2, n).unwrap();
            assert_eq!(
                BigInt::from(ring.chi_q(&shifted)),
                ring.chi_kn(&s4, 2, n).unwrap()
            );
        }
    }

    #[test]
    fn json_round_trip() {
        let ring = BurnsideRing::new();
        let d8 = ring.class_of(&parse_group("D8").unwrap());
        let c4 = ring.class_of(&parse_group("C4").unwrap());
        let cls = &d8.scale(2) - &c4;
        let text = ring.to_json(&cls);
        let back = ring.from_json(&text).unwrap();
        assert_eq!(back, cls);

        // A class whose representative has no grammar name still round-trips.
        let s4 = parse_group("S4").unwrap();
        let cen = s4.centralizer(&[s4.element(1).clone()]).unwrap();
        let anon = ring.class_of(&cen);
        let text = ring.to_json(&anon);
        assert_eq!(ring.from_json(&text).unwrap(), anon);
    }

    #[test]
    fn describe_renders_signed_terms() {
        let ring = BurnsideRing::new();
        let d8 = ring.class_of(&parse_group("D8").unwrap());
        let c4 = ring.class_of(&parse_group("C4").unwrap());
        let cls = &d8.scale(2) - &c4;
        let text = ring.describe(&cls);
        assert!(text.contains("2*[D8]"), "{text}");
        assert!(text.contains("- [C4]"), "{text}");
        assert_eq!(ring.describe(&BurnsideClass::zero()), "0");
    }
}

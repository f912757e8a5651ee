//! Isomorphism testing, fingerprints, and monomorphism enumeration.

use std::collections::{BTreeMap, HashMap};

use crate::group::FiniteGroup;
use crate::perm::Permutation;
use crate::util::UnionFind;

/// Cheap isomorphism invariants. Equal fingerprints are necessary for
/// isomorphism; unequal fingerprints certify non-isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupFingerprint {
    pub order: u64,
    pub element_order_histogram: BTreeMap<u64, u64>,
    pub class_size_multiset: Vec<u64>,
    pub abelian: bool,
    pub center_order: u64,
    pub derived_series_orders: Vec<u64>,
}

pub fn fingerprint(g: &FiniteGroup) -> GroupFingerprint {
    let mut histogram = BTreeMap::new();
    for id in 0..g.order() as u32 {
        *histogram.entry(g.element_order(id)).or_insert(0) += 1;
    }
    let mut class_sizes = g.conjugacy_classes().class_sizes();
    class_sizes.sort_unstable();

    let mut derived = Vec::new();
    let mut current = g.derived_subgroup();
    loop {
        let order = current.order();
        if derived.last() == Some(&order) {
            break;
        }
        derived.push(order);
        if order == 1 {
            break;
        }
        current = current.derived_subgroup();
    }

    GroupFingerprint {
        order: g.order(),
        element_order_histogram: histogram,
        class_size_multiset: class_sizes,
        abelian: g.is_abelian(),
        center_order: g.center_ids().len() as u64,
        derived_series_orders: derived,
    }
}

/// How each element of the growing subgroup chain is produced, for replaying
/// a candidate homomorphism from generator images.
enum Recipe {
    Identity,
    /// `elements[parent] ∘ generator[gen]`
    Step {
        parent: usize,
        gen: usize,
    },
}

/// Closure data of the subgroups ⟨k₁,…,k_t⟩ along a generating sequence,
/// arranged so that each level extends the previous one in place.
struct SubgroupChain {
    gen_ids: Vec<u32>,
    /// Element ids of the full group in discovery order.
    elements: Vec<u32>,
    recipes: Vec<Recipe>,
    /// elements[..level_len[t]] is the closure of the first t+1 generators.
    level_len: Vec<usize>,
    position: HashMap<u32, usize>,
}

impl SubgroupChain {
    fn build(k: &FiniteGroup) -> SubgroupChain {
        let gen_ids = k.generating_sequence();
        let mut elements: Vec<u32> = vec![k.identity_id()];
        let mut recipes: Vec<Recipe> = vec![Recipe::Identity];
        let mut position: HashMap<u32, usize> = HashMap::new();
        position.insert(k.identity_id(), 0);
        let mut level_len = Vec::new();
        for t in 0..gen_ids.len() {
            // Extend the previous closure by the new generator.
            let mut queue: Vec<usize> = (0..elements.len()).collect();
            while let Some(pos) = queue.pop() {
                for (j, &gid) in gen_ids.iter().enumerate().take(t + 1) {
                    let y = k.compose_ids(elements[pos], gid);
                    if let std::collections::hash_map::Entry::Vacant(slot) = position.entry(y) {
                        slot.insert(elements.len());
                        elements.push(y);
                        recipes.push(Recipe::Step {
                            parent: pos,
                            gen: j,
                        });
                        queue.push(elements.len() - 1);
                    }
                }
            }
            level_len.push(elements.len());
        }
        SubgroupChain {
            gen_ids,
            elements,
            recipes,
            level_len,
            position,
        }
    }
}

/// Backtracking search over images of a generating sequence of `k` in `g`.
/// At each depth the partial map is replayed over the subgroup generated so
/// far and validated as an injective homomorphism.
struct MonoSearch<'a> {
    k: &'a FiniteGroup,
    g: &'a FiniteGroup,
    chain: SubgroupChain,
    /// For each depth, candidate image ids grouped by required order.
    candidates: Vec<Vec<u32>>,
    /// Replayed images, indexed like `chain.elements`.
    images: Vec<u32>,
    found: Vec<Vec<u32>>,
    stop_at_first: bool,
}

impl<'a> MonoSearch<'a> {
    fn new(k: &'a FiniteGroup, g: &'a FiniteGroup, iso_mode: bool, stop_at_first: bool) -> Self {
        let chain = SubgroupChain::build(k);
        let candidates = chain
            .gen_ids
            .iter()
            .map(|&kid| {
                let want_order = k.element_order(kid);
                (0..g.order() as u32)
                    .filter(|&h| {
                        if g.element_order(h) != want_order {
                            return false;
                        }
                        if iso_mode {
                            // Isomorphisms match conjugacy class sizes.
                            let k_size = k.conjugacy_classes().classes()[k.class_index(kid)].len();
                            let g_size = g.conjugacy_classes().classes()[g.class_index(h)].len();
                            if k_size != g_size {
                                return false;
                            }
                        }
                        true
                    })
                    .collect()
            })
            .collect();
        let images = vec![0u32; chain.elements.len()];
        MonoSearch {
            k,
            g,
            chain,
            candidates,
            images,
            found: Vec::new(),
            stop_at_first,
        }
    }

    fn run(&mut self) {
        if self.chain.gen_ids.is_empty() {
            // Trivial source group: the unique map.
            self.found.push(Vec::new());
            return;
        }
        self.descend(0);
    }

    fn descend(&mut self, depth: usize) {
        let candidate_ids = self.candidates[depth].clone();
        for h in candidate_ids {
            if self.extend_and_check(depth, h) {
                if depth + 1 == self.chain.gen_ids.len() {
                    let tuple: Vec<u32> = self
                        .chain
                        .gen_ids
                        .iter()
                        .map(|kid| self.images[self.chain.position[kid]])
                        .collect();
                    self.found.push(tuple);
                    if self.stop_at_first {
                        return;
                    }
                } else {
                    self.descend(depth + 1);
                    if self.stop_at_first && !self.found.is_empty() {
                        return;
                    }
                }
            }
        }
    }

    /// Replays the partial map over the subgroup at `depth` with image `h`
    /// for the new generator, then verifies injectivity and the
    /// homomorphism property on every pair touching a new element.
    fn extend_and_check(&mut self, depth: usize, h: u32) -> bool {
        let old_len = if depth == 0 {
            1
        } else {
            self.chain.level_len[depth - 1]
        };
        let new_len = self.chain.level_len[depth];
        let gen_images: Vec<u32> = (0..=depth)
            .map(|j| {
                if j == depth {
                    h
                } else {
                    self.images[self.chain.position[&self.chain.gen_ids[j]]]
                }
            })
            .collect();
        for pos in old_len..new_len {
            match self.chain.recipes[pos] {
                Recipe::Identity => unreachable!("identity is position 0"),
                Recipe::Step { parent, gen } => {
                    self.images[pos] = self.g.compose_ids(self.images[parent], gen_images[gen]);
                }
            }
        }
        // Injectivity across the whole level.
        let mut seen: HashMap<u32, usize> = HashMap::with_capacity(new_len);
        for pos in 0..new_len {
            if seen.insert(self.images[pos], pos).is_some() {
                return false;
            }
        }
        // Homomorphism property on pairs with at least one new element.
        for a in 0..new_len {
            let b_start = if a >= old_len { 0 } else { old_len };
            for b in b_start..new_len {
                let kc = self
                    .k
                    .compose_ids(self.chain.elements[a], self.chain.elements[b]);
                let expected = self.images[self.chain.position[&kc]];
                if self.g.compose_ids(self.images[a], self.images[b]) != expected {
                    return false;
                }
            }
        }
        true
    }
}

/// Whether an isomorphism exists, assuming fingerprints already matched.
pub(crate) fn exists_isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    if g.order() != h.order() {
        return false;
    }
    let mut search = MonoSearch::new(g, h, true, true);
    search.run();
    !search.found.is_empty()
}

/// Fingerprint filter first; on a match, backtracking search for a bijective
/// homomorphism via generator images.
pub fn is_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    if g.order() != h.order() {
        return false;
    }
    if fingerprint(g) != fingerprint(h) {
        return false;
    }
    exists_isomorphism(g, h)
}

/// All monomorphisms `k → g`, each recorded as the image tuple of the
/// generating sequence of `k`.
pub(crate) fn monomorphisms(k: &FiniteGroup, g: &FiniteGroup) -> Vec<Vec<u32>> {
    if !g.order().is_multiple_of(k.order()) {
        return Vec::new();
    }
    let mut search = MonoSearch::new(k, g, false, false);
    search.run();
    search.found
}

/// The number of `g`-conjugacy classes of monomorphisms `k → g`.
/// Returns 0 when no monomorphism exists.
pub fn monomorphism_classes(k: &FiniteGroup, g: &FiniteGroup) -> u64 {
    let monos = monomorphisms(k, g);
    if monos.is_empty() {
        return 0;
    }
    let index: HashMap<&[u32], usize> = monos
        .iter()
        .enumerate()
        .map(|(i, t)| (t.as_slice(), i))
        .collect();
    let mut uf = UnionFind::new(monos.len());
    let gen_count = g.generators().len();
    for (i, tuple) in monos.iter().enumerate() {
        for gen_idx in 0..gen_count {
            let gid = g
                .id_of(&g.generators()[gen_idx])
                .expect("generators lie in the group");
            let conjugated: Vec<u32> = tuple.iter().map(|&x| g.conjugate_id(x, gid)).collect();
            let j = index[conjugated.as_slice()];
            uf.union(i, j);
        }
    }
    uf.class_count() as u64
}

/// First embedding of `k` into `g` in the deterministic search order, as
/// images of `k.generating_sequence()`.
pub fn find_embedding(k: &FiniteGroup, g: &FiniteGroup) -> Option<Vec<Permutation>> {
    if !g.order().is_multiple_of(k.order()) {
        return None;
    }
    let mut search = MonoSearch::new(k, g, false, true);
    search.run();
    search
        .found
        .first()
        .map(|tuple| tuple.iter().map(|&id| g.element(id).clone()).collect())
}

/// Validates that mapping the generating sequence of `k` to `images` in `g`
/// defines an injective homomorphism.
pub fn validate_embedding(k: &FiniteGroup, g: &FiniteGroup, images: &[Permutation]) -> bool {
    let chain = SubgroupChain::build(k);
    if images.len() != chain.gen_ids.len() {
        return false;
    }
    let Some(image_ids) = images
        .iter()
        .map(|p| g.id_of(p))
        .collect::<Option<Vec<u32>>>()
    else {
        return false;
    };
    let mut mapped = vec![0u32; chain.elements.len()];
    for pos in 0..chain.elements.len() {
        mapped[pos] = match chain.recipes[pos] {
            Recipe::Identity => g.identity_id(),
            Recipe::Step { parent, gen } => g.compose_ids(mapped[parent], image_ids[gen]),
        };
    }
    let mut seen = HashMap::new();
    for (pos, &m) in mapped.iter().enumerate() {
        if seen.insert(m, pos).is_some() {
            return false;
        }
    }
    for a in 0..chain.elements.len() {
        for b in 0..chain.elements.len() {
            let kc = k.compose_ids(chain.elements[a], chain.elements[b]);
            if g.compose_ids(mapped[a], mapped[b]) != mapped[chain.position[&kc]] {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::names::parse_group;

    #[test]
    fn fingerprints_separate_d8_from_c4xc2() {
        let d8 = parse_group("D8").unwrap();
        let ab = parse_group("C4xC2").unwrap();
        let f1 = fingerprint(&d8);
        let f2 = fingerprint(&ab);
        assert_ne!(f1.element_order_histogram, f2.element_order_histogram);
        assert!(!is_isomorphic(&d8, &ab));
    }

    #[test]
    fn s3xc2_is_d12() {
        let a = parse_group("S3xC2").unwrap();
        let b = parse_group("D12").unwrap();
        assert!(is_isomorphic(&a, &b));
        assert!(is_isomorphic(&b, &a));
    }

    #[test]
    fn c4_is_not_klein() {
        let c4 = parse_group("C4").unwrap();
        let v = parse_group("C2xC2").unwrap();
        assert_ne!(fingerprint(&c4), fingerprint(&v));
        assert!(!is_isomorphic(&c4, &v));
    }

    #[test]
    fn every_group_is_isomorphic_to_itself() {
        for spec in ["C1", "C6", "D8", "Q8", "S4", "A4", "C2xC2xC2"] {
            let g = parse_group(spec).unwrap();
            assert!(is_isomorphic(&g, &g), "{spec}");
        }
    }

    #[test]
    fn mono_class_counts() {
        let c3 = parse_group("C3").unwrap();
        let c4 = parse_group("C4").unwrap();
        let s3 = parse_group("S3").unwrap();
        // Two injections C3 → S3, conjugate to each other.
        assert_eq!(monomorphisms(&c3, &s3).len(), 2);
        assert_eq!(monomorphism_classes(&c3, &s3), 1);
        // 4 does not divide 6.
        assert_eq!(monomorphism_classes(&c4, &s3), 0);
        // Out(S3) is trivial.
        assert_eq!(monomorphism_classes(&s3, &s3), 1);
    }

    #[test]
    fn trivial_group_maps_once_into_everything() {
        let trivial = parse_group("C1").unwrap();
        for spec in ["C1", "C2", "D8", "S4"] {
            let g = parse_group(spec).unwrap();
            assert_eq!(monomorphism_classes(&trivial, &g), 1, "{spec}");
        }
    }

    #[test]
    fn out_of_klein_four_group_counts_bases() {
        let v = parse_group("C2xC2").unwrap();
        // Aut(C2×C2) ≅ S3 acts with trivial inner part.
        assert_eq!(monomorphism_classes(&v, &v), 6);
    }

    #[test]
    fn embeddings_validate() {
        let c4 = parse_group("C4").unwrap();
        let d8 = parse_group("D8").unwrap();
        let emb = find_embedding(&c4, &d8).expect("C4 embeds in D8");
        assert!(validate_embedding(&c4, &d8, &emb));
        // An order-2 image cannot define an embedding of C4.
        let wrong = [d8
            .elements()
            .iter()
            .find(|p| p.order() == 2)
            .unwrap()
            .clone()];
        assert!(!validate_embedding(&c4, &d8, &wrong));
        // S3 does not embed in C4-sized groups.
        let s3 = parse_group("S3").unwrap();
        assert!(find_embedding(&s3, &c4).is_none());
    }
}

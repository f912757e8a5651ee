use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default bound on the order of any generated group.
pub const DEFAULT_MAX_ORDER: u64 = 5000;

/// Partition of a group's elements into conjugacy classes.
///
/// Classes are listed by their least element id, each class sorted
/// ascending, so the representative of a class is its first entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClasses {
    classes: Vec<Vec<u32>>,
}

impl ConjugacyClasses {
    pub fn count(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Vec<u32>] {
        &self.classes
    }

    pub fn representatives(&self) -> Vec<u32> {
        self.classes.iter().map(|c| c[0]).collect()
    }

    pub fn class_sizes(&self) -> Vec<u64> {
        self.classes.iter().map(|c| c.len() as u64).collect()
    }
}

/// A concrete finite permutation group with a fully cached element list.
///
/// Elements are sorted lexicographically by image sequence; the identity is
/// always id 0, and every "representative" choice made by the library is the
/// minimum under this order.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    orders: Vec<u64>,
    class_of: Vec<u32>,
    classes: ConjugacyClasses,
    name: Option<String>,
}

impl FiniteGroup {
    /// The trivial group acting on one point.
    pub fn trivial() -> Self {
        let mut set = HashSet::new();
        set.insert(Permutation::identity(1));
        FiniteGroup::from_closed_set(1, set, Vec::new(), None)
    }

    /// Generates the group spanned by `generators` under the default order
    /// bound. An empty generator list yields the trivial group on one point.
    pub fn closure(generators: &[Permutation]) -> Result<Self> {
        FiniteGroup::closure_bounded(generators, DEFAULT_MAX_ORDER)
    }

    /// As [`FiniteGroup::closure`], with an explicit order bound.
    pub fn closure_bounded(generators: &[Permutation], max_order: u64) -> Result<Self> {
        let Some(first) = generators.first() else {
            return Ok(FiniteGroup::trivial());
        };
        let degree = first.degree();
        if generators.iter().any(|g| g.degree() != degree) {
            return Err(Error::InvalidInput(
                "generators must all have the same degree".into(),
            ));
        }
        let set = close_under_products(degree, generators, max_order)?;
        Ok(FiniteGroup::from_closed_set(
            degree,
            set,
            generators.to_vec(),
            None,
        ))
    }

    /// Internal constructor for a set already closed under the group
    /// operation. Generators are recovered greedily when not supplied.
    fn from_closed_set(
        degree: usize,
        set: HashSet<Permutation>,
        generators: Vec<Permutation>,
        name: Option<String>,
    ) -> Self {
        let mut elements: Vec<Permutation> = set.into_iter().collect();
        elements.sort_unstable();
        debug_assert!(elements[0].is_identity());

        let orders: Vec<u64> = elements.iter().map(|p| p.order()).collect();
        let generators = if generators.is_empty() && elements.len() > 1 {
            greedy_generators(&elements)
        } else {
            generators
        };

        let (classes, class_of) = conjugacy_partition(&elements, &generators);
        FiniteGroup {
            degree,
            generators,
            elements,
            orders,
            class_of,
            classes,
            name,
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// The group name when set, otherwise a placeholder carrying the order.
    pub fn display_name(&self) -> String {
        match &self.name {
            Some(n) => n.clone(),
            None => format!("<order {}>", self.order()),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, id: u32) -> &Permutation {
        &self.elements[id as usize]
    }

    /// Looks up the id of a permutation, if it belongs to the group.
    pub fn id_of(&self, perm: &Permutation) -> Option<u32> {
        if perm.degree() != self.degree {
            return None;
        }
        self.elements.binary_search(perm).ok().map(|i| i as u32)
    }

    pub fn contains(&self, perm: &Permutation) -> bool {
        self.id_of(perm).is_some()
    }

    pub fn identity_id(&self) -> u32 {
        0
    }

    pub fn compose_ids(&self, a: u32, b: u32) -> u32 {
        let p = self.elements[a as usize].compose(&self.elements[b as usize]);
        self.id_of(&p).expect("group is closed under composition")
    }

    pub fn inverse_id(&self, a: u32) -> u32 {
        let p = self.elements[a as usize].inverse();
        self.id_of(&p).expect("group is closed under inverses")
    }

    /// Conjugate `g · x · g⁻¹` at the id level.
    pub fn conjugate_id(&self, x: u32, g: u32) -> u32 {
        let p = self.elements[x as usize].conjugate_by(&self.elements[g as usize]);
        self.id_of(&p).expect("group is closed under conjugation")
    }

    pub fn element_order(&self, id: u32) -> u64 {
        self.orders[id as usize]
    }

    pub fn conjugacy_classes(&self) -> &ConjugacyClasses {
        &self.classes
    }

    /// Index of the conjugacy class containing the element.
    pub fn class_index(&self, id: u32) -> usize {
        self.class_of[id as usize] as usize
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, a)| self.generators[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    /// Ids of the central elements.
    pub fn center_ids(&self) -> Vec<u32> {
        (0..self.elements.len() as u32)
            .filter(|&x| {
                self.generators
                    .iter()
                    .all(|g| self.elements[x as usize].commutes_with(g))
            })
            .collect()
    }

    /// The subgroup of elements commuting with every member of `s`.
    pub fn centralizer(&self, s: &[Permutation]) -> Result<FiniteGroup> {
        let ids = s
            .iter()
            .map(|p| self.id_of(p).ok_or(Error::ElementNotInGroup))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.centralizer_of_ids(&ids))
    }

    /// As [`FiniteGroup::centralizer`], with ids into this group.
    pub fn centralizer_of_ids(&self, ids: &[u32]) -> FiniteGroup {
        let set: HashSet<Permutation> = self
            .elements
            .iter()
            .filter(|x| {
                ids.iter()
                    .all(|&s| x.commutes_with(&self.elements[s as usize]))
            })
            .cloned()
            .collect();
        FiniteGroup::from_closed_set(self.degree, set, Vec::new(), None)
    }

    /// The subgroup generated by `s` inside this group.
    pub fn subgroup_generated(&self, s: &[Permutation]) -> Result<FiniteGroup> {
        for p in s {
            if !self.contains(p) {
                return Err(Error::ElementNotInGroup);
            }
        }
        if s.is_empty() {
            let mut set = HashSet::new();
            set.insert(Permutation::identity(self.degree));
            return Ok(FiniteGroup::from_closed_set(
                self.degree,
                set,
                Vec::new(),
                None,
            ));
        }
        let set = close_under_products(self.degree, s, self.order())?;
        Ok(FiniteGroup::from_closed_set(
            self.degree,
            set,
            s.to_vec(),
            None,
        ))
    }

    /// Direct product acting on the disjoint union of the point sets.
    pub fn direct_product(&self, other: &FiniteGroup) -> Result<FiniteGroup> {
        self.direct_product_bounded(other, DEFAULT_MAX_ORDER)
    }

    pub fn direct_product_bounded(
        &self,
        other: &FiniteGroup,
        max_order: u64,
    ) -> Result<FiniteGroup> {
        if self.order() * other.order() > max_order {
            return Err(Error::ClosureExceedsBound { limit: max_order });
        }
        let degree = self.degree + other.degree;
        let mut set = HashSet::with_capacity((self.order() * other.order()) as usize);
        for a in &self.elements {
            let a = a.embed(0, degree);
            for b in &other.elements {
                let mut images = a.images().to_vec();
                for (i, &im) in b.images().iter().enumerate() {
                    images[self.degree + i] = im + self.degree as u16;
                }
                set.insert(Permutation::new(images).expect("product of bijections"));
            }
        }
        let mut generators: Vec<Permutation> =
            self.generators.iter().map(|g| g.embed(0, degree)).collect();
        generators.extend(
            other
                .generators
                .iter()
                .map(|g| g.embed(self.degree, degree)),
        );
        let name = match (&self.name, &other.name) {
            (Some(a), Some(b)) => Some(format!("{a}x{b}")),
            _ => None,
        };
        Ok(FiniteGroup::from_closed_set(degree, set, generators, name))
    }

    /// A short generating sequence: repeatedly adjoin the least element
    /// outside the closure of what has been picked so far.
    pub fn generating_sequence(&self) -> Vec<u32> {
        let mut picked: Vec<u32> = Vec::new();
        let mut span: HashSet<u32> = HashSet::new();
        span.insert(0);
        while span.len() < self.elements.len() {
            let next = (0..self.elements.len() as u32)
                .find(|id| !span.contains(id))
                .expect("span is proper");
            picked.push(next);
            // Extend the span by right-multiplying with the new generator.
            let mut queue: Vec<u32> = span.iter().copied().collect();
            while let Some(x) = queue.pop() {
                for &g in &picked {
                    let y = self.compose_ids(x, g);
                    if span.insert(y) {
                        queue.push(y);
                    }
                }
            }
        }
        picked
    }

    /// The commutator subgroup, computed as the normal closure of the
    /// commutators of the generators.
    pub fn derived_subgroup(&self) -> FiniteGroup {
        let mut comms: HashSet<Permutation> = HashSet::new();
        for a in &self.generators {
            for b in &self.generators {
                let c = a.compose(b).compose(&a.inverse()).compose(&b.inverse());
                comms.insert(c);
            }
        }
        comms.remove(&Permutation::identity(self.degree));

        let mut set: HashSet<Permutation> = HashSet::new();
        set.insert(Permutation::identity(self.degree));
        let mut queue: Vec<Permutation> = vec![Permutation::identity(self.degree)];
        while let Some(x) = queue.pop() {
            for c in &comms {
                let y = x.compose(c);
                if !set.contains(&y) {
                    set.insert(y.clone());
                    queue.push(y);
                }
            }
            for g in &self.generators {
                let y = x.conjugate_by(g);
                if !set.contains(&y) {
                    set.insert(y.clone());
                    queue.push(y);
                }
            }
        }
        FiniteGroup::from_closed_set(self.degree, set, Vec::new(), None)
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.display_name(), self.order())
    }
}

/// BFS closure of a generator list under composition, with an order bound.
///
/// Right-multiplication from the identity reaches every element: inverses of
/// finite-order permutations are positive powers.
fn close_under_products(
    degree: usize,
    generators: &[Permutation],
    max_order: u64,
) -> Result<HashSet<Permutation>> {
    let mut set = HashSet::new();
    let identity = Permutation::identity(degree);
    set.insert(identity.clone());
    let mut queue = vec![identity];
    while let Some(x) = queue.pop() {
        for g in generators {
            let y = x.compose(g);
            if !set.contains(&y) {
                if set.len() as u64 >= max_order {
                    return Err(Error::ClosureExceedsBound { limit: max_order });
                }
                set.insert(y.clone());
                queue.push(y);
            }
        }
    }
    Ok(set)
}

/// Greedy generating sequence over a sorted, closed element list.
fn greedy_generators(elements: &[Permutation]) -> Vec<Permutation> {
    let mut picked: Vec<Permutation> = Vec::new();
    let mut span: HashSet<&Permutation> = HashSet::new();
    span.insert(&elements[0]);
    let lookup: HashSet<&Permutation> = elements.iter().collect();
    debug_assert!(lookup.len() == elements.len());
    while span.len() < elements.len() {
        let next = elements
            .iter()
            .find(|p| !span.contains(*p))
            .expect("span is proper");
        picked.push(next.clone());
        let mut queue: Vec<&Permutation> = span.iter().copied().collect();
        while let Some(x) = queue.pop() {
            for g in &picked {
                let y = x.compose(g);
                let y_ref = lookup
                    .get(&y)
                    .expect("element set is closed under composition");
                if span.insert(y_ref) {
                    queue.push(y_ref);
                }
            }
        }
    }
    picked
}

/// Partitions elements into conjugacy classes by orbit refinement under
/// conjugation by the generators.
fn conjugacy_partition(
    elements: &[Permutation],
    generators: &[Permutation],
) -> (ConjugacyClasses, Vec<u32>) {
    let n = elements.len();
    let id_of = |p: &Permutation| -> u32 {
        elements
            .binary_search(p)
            .expect("conjugate stays in the group") as u32
    };
    let mut class_of = vec![u32::MAX; n];
    let mut classes: Vec<Vec<u32>> = Vec::new();
    for start in 0..n as u32 {
        if class_of[start as usize] != u32::MAX {
            continue;
        }
        let class_idx = classes.len() as u32;
        let mut orbit = vec![start];
        class_of[start as usize] = class_idx;
        let mut queue = vec![start];
        while let Some(x) = queue.pop() {
            for g in generators {
                let y = id_of(&elements[x as usize].conjugate_by(g));
                if class_of[y as usize] == u32::MAX {
                    class_of[y as usize] = class_idx;
                    orbit.push(y);
                    queue.push(y);
                }
            }
        }
        orbit.sort_unstable();
        classes.push(orbit);
    }
    (ConjugacyClasses { classes }, class_of)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    /// Independent oracle: closes a set under pairwise products until stable.
    fn naive_product_closure(gens: &[Permutation]) -> BTreeSet<Permutation> {
        let degree = gens.first().map_or(1, |g| g.degree());
        let mut set: BTreeSet<Permutation> = gens.iter().cloned().collect();
        set.insert(Permutation::identity(degree));
        loop {
            let mut fresh = Vec::new();
            for a in &set {
                for b in &set {
                    let c = a.compose(b);
                    if !set.contains(&c) {
                        fresh.push(c);
                    }
                }
            }
            if fresh.is_empty() {
                return set;
            }
            set.extend(fresh);
        }
    }

    fn cyc(degree: usize, cycles: &[&[u16]]) -> Permutation {
        let cycles: Vec<Vec<u16>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(degree, &cycles).unwrap()
    }

    #[test]
    fn closure_of_a_three_cycle() {
        let g = FiniteGroup::closure(&[cyc(3, &[&[0, 1, 2]])]).unwrap();
        assert_eq!(g.order(), 3);
    }

    #[test]
    fn closure_of_dihedral_generators_matches_oracle() {
        let gens = [cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[0, 2]])];
        let g = FiniteGroup::closure(&gens).unwrap();
        let oracle = naive_product_closure(&gens);
        assert_eq!(g.order(), 8);
        assert_eq!(oracle.len(), 8);
        assert!(g.elements().iter().all(|p| oracle.contains(p)));
        assert_eq!(g.conjugacy_classes().count(), 5);
    }

    #[test]
    fn closure_of_empty_generating_set_is_trivial() {
        let g = FiniteGroup::closure(&[]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.degree(), 1);
        assert_eq!(g.conjugacy_classes().count(), 1);
    }

    #[test]
    fn closure_bound_is_enforced() {
        let gens = [cyc(7, &[&[0, 1, 2, 3, 4, 5, 6]]), cyc(7, &[&[0, 1]])];
        // <(0..6), (0 1)> = S7 of order 5040 > 5000.
        assert!(matches!(
            FiniteGroup::closure(&gens),
            Err(Error::ClosureExceedsBound { limit: 5000 })
        ));
        assert!(FiniteGroup::closure_bounded(&gens, 5040).is_ok());
    }

    #[test]
    fn identity_is_element_zero() {
        let gens = [cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[0, 2]])];
        let g = FiniteGroup::closure(&gens).unwrap();
        assert!(g.element(0).is_identity());
        assert_eq!(g.identity_id(), 0);
    }

    #[test]
    fn symmetric_group_classes() {
        let s3 = FiniteGroup::closure(&[cyc(3, &[&[0, 1]]), cyc(3, &[&[0, 1, 2]])]).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.conjugacy_classes().count(), 3);
    }

    #[test]
    fn class_equation_holds() {
        let s4 = FiniteGroup::closure(&[cyc(4, &[&[0, 1]]), cyc(4, &[&[0, 1, 2, 3]])]).unwrap();
        let sizes = s4.conjugacy_classes().class_sizes();
        assert_eq!(sizes.iter().sum::<u64>(), s4.order());
        // |class of g| = |G| / |C(g)| for every representative.
        for &rep in &s4.conjugacy_classes().representatives() {
            let c = s4.centralizer_of_ids(&[rep]);
            let class = &s4.conjugacy_classes().classes()[s4.class_index(rep)];
            assert_eq!(class.len() as u64 * c.order(), s4.order());
        }
    }

    #[test]
    fn centralizer_examples() {
        let s3 = FiniteGroup::closure(&[cyc(3, &[&[0, 1]]), cyc(3, &[&[0, 1, 2]])]).unwrap();
        // Centralizer of the identity is the whole group.
        assert_eq!(s3.centralizer_of_ids(&[0]).order(), s3.order());

        // Brute-force oracle: commuting elements of a 3-cycle.
        let three_cycle = cyc(3, &[&[0, 1, 2]]);
        let expected = s3
            .elements()
            .iter()
            .filter(|x| x.commutes_with(&three_cycle))
            .count();
        let c = s3.centralizer(&[three_cycle]).unwrap();
        assert_eq!(c.order(), expected as u64);
        assert_eq!(c.order(), 3);

        // The square of the rotation is central in D8.
        let d8 = FiniteGroup::closure(&[cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[0, 2]])]).unwrap();
        let r2 = cyc(4, &[&[0, 2], &[1, 3]]);
        assert_eq!(d8.centralizer(&[r2]).unwrap().order(), 8);

        let outside = cyc(3, &[&[0, 1, 2]]);
        assert!(s3.centralizer(&[outside.compose(&outside)]).is_ok());
        assert!(matches!(
            d8.centralizer(&[cyc(4, &[&[0, 1]])]),
            Err(Error::ElementNotInGroup)
        ));
    }

    #[test]
    fn centralizer_contains_center_and_generated_subgroup_of_commuting_set() {
        let d8 = FiniteGroup::closure(&[cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[0, 2]])]).unwrap();
        let r = cyc(4, &[&[0, 1, 2, 3]]);
        let c = d8.centralizer(std::slice::from_ref(&r)).unwrap();
        for &z in &d8.center_ids() {
            assert!(c.contains(d8.element(z)));
        }
        let h = d8.subgroup_generated(&[r]).unwrap();
        for p in h.elements() {
            assert!(c.contains(p));
        }
    }

    #[test]
    fn subgroup_generated_examples() {
        let d8 = FiniteGroup::closure(&[cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[0, 2]])]).unwrap();
        assert_eq!(d8.subgroup_generated(&[]).unwrap().order(), 1);

        let r = cyc(4, &[&[0, 1, 2, 3]]);
        let c4 = d8.subgroup_generated(std::slice::from_ref(&r)).unwrap();
        assert_eq!(c4.order(), 4);
        assert_eq!(naive_product_closure(&[r]).len(), 4);

        let s4 = FiniteGroup::closure(&[cyc(4, &[&[0, 1]]), cyc(4, &[&[0, 1, 2, 3]])]).unwrap();
        let gens = [cyc(4, &[&[0, 1]]), cyc(4, &[&[2, 3]])];
        let v = s4.subgroup_generated(&gens).unwrap();
        assert_eq!(v.order(), 4);
        assert_eq!(naive_product_closure(&gens).len(), 4);
    }

    #[test]
    fn direct_product_orders() {
        let c2 = FiniteGroup::closure(&[cyc(2, &[&[0, 1]])]).unwrap();
        let v = c2.direct_product(&c2).unwrap();
        assert_eq!(v.order(), 4);
        assert!(v.is_abelian());

        let trivial = FiniteGroup::trivial();
        let s3 = FiniteGroup::closure(&[cyc(3, &[&[0, 1]]), cyc(3, &[&[0, 1, 2]])]).unwrap();
        let p = s3.direct_product(&trivial).unwrap();
        assert_eq!(p.order(), s3.order());
        assert_eq!(
            p.conjugacy_classes().count(),
            s3.conjugacy_classes().count()
        );
    }

    #[test]
    fn lagrange_for_element_orders() {
        for g in [
            FiniteGroup::closure(&[cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[0, 2]])]).unwrap(),
            FiniteGroup::closure(&[cyc(4, &[&[0, 1]]), cyc(4, &[&[0, 1, 2, 3]])]).unwrap(),
        ] {
            for id in 0..g.order() as u32 {
                assert_eq!(g.order() % g.element_order(id), 0);
            }
        }
    }

    #[test]
    fn derived_subgroup_of_s4_is_a4() {
        let s4 = FiniteGroup::closure(&[cyc(4, &[&[0, 1]]), cyc(4, &[&[0, 1, 2, 3]])]).unwrap();
        let d1 = s4.derived_subgroup();
        assert_eq!(d1.order(), 12);
        let d2 = d1.derived_subgroup();
        assert_eq!(d2.order(), 4);
        let d3 = d2.derived_subgroup();
        assert_eq!(d3.order(), 1);
    }

    #[test]
    fn generating_sequence_spans() {
        let s4 = FiniteGroup::closure(&[cyc(4, &[&[0, 1]]), cyc(4, &[&[0, 1, 2, 3]])]).unwrap();
        let seq = s4.generating_sequence();
        let perms: Vec<Permutation> = seq.iter().map(|&i| s4.element(i).clone()).collect();
        assert_eq!(naive_product_closure(&perms).len() as u64, s4.order());
    }
}

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::sync::OnceLock;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::permutation::Permutation;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("permutation degree {got} does not match group degree {want}")]
    DegreeMismatch { got: usize, want: usize },
    #[error("element is not a member of the group")]
    NotInGroup,
    #[error("group order {order} exceeds the configured bound {bound}")]
    OrderExceedsBound { order: u128, bound: u128 },
    #[error("group order {order} exceeds the size cap {cap}")]
    TooLarge { order: u128, cap: u128 },
}

/// A finite permutation group given by generators, with a lazily computed and
/// cached base-and-strong-generating-set structure. Immutable once built, so
/// values can be shared freely across threads.
#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    bsgs: OnceLock<Bsgs>,
}

#[derive(Debug)]
struct Level {
    point: usize,
    orbit: Vec<usize>, // BFS discovery order
    transversal: BTreeMap<usize, Permutation>, // pt -> u with u(point) = pt
}

#[derive(Debug)]
struct Bsgs {
    base: Vec<usize>,
    strong_gens: Vec<Permutation>,
    levels: Vec<Level>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        // The BSGS is cheap to rebuild relative to its size and rebuilding is
        // deterministic, so a clone just restarts the lazy cell.
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            bsgs: OnceLock::new(),
        }
    }
}

impl PermGroup {
    /// Builds a group from generators. All generators must share the degree;
    /// identity generators are dropped.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self, GroupError> {
        for g in &generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    got: g.degree(),
                    want: degree,
                });
            }
        }
        let mut kept: Vec<Permutation> = Vec::new();
        for g in generators {
            if !g.is_identity() && !kept.contains(&g) {
                kept.push(g);
            }
        }
        Ok(PermGroup {
            degree,
            generators: kept,
            bsgs: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            bsgs: OnceLock::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    fn bsgs(&self) -> &Bsgs {
        self.bsgs.get_or_init(|| Bsgs::build(self.degree, &self.generators))
    }

    /// Exact group order: the product of the fundamental orbit lengths.
    pub fn order(&self) -> u128 {
        self.bsgs()
            .levels
            .iter()
            .map(|l| l.orbit.len() as u128)
            .product()
    }

    /// Membership by sifting through the stabilizer chain.
    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && {
            let (residue, _) = self.bsgs().sift(g, 0);
            residue.is_identity()
        }
    }

    /// Membership with a degree check surfaced as an error.
    pub fn membership(&self, g: &Permutation) -> Result<bool, GroupError> {
        if g.degree() != self.degree {
            return Err(GroupError::DegreeMismatch {
                got: g.degree(),
                want: self.degree,
            });
        }
        Ok(self.contains(g))
    }

    pub fn base(&self) -> &[usize] {
        &self.bsgs().base
    }

    /// Uniformly random element: the product of independently chosen coset
    /// representatives, one per stabilizer-chain level.
    pub fn random_element<R: Rng>(&self, rng: &mut R) -> Permutation {
        let bsgs = self.bsgs();
        let mut g = Permutation::identity(self.degree);
        // Compose deepest level first: G = ... · U_1 · U_0.
        for level in bsgs.levels.iter().rev() {
            let pt = level.orbit[rng.gen_range(0..level.orbit.len())];
            g = g.then(&level.transversal[&pt]);
        }
        g
    }

    /// Enumerates all elements when the order is at most `cap`; the result is
    /// sorted, so the identity comes first.
    pub fn elements_capped(&self, cap: u128) -> Result<Vec<Permutation>, GroupError> {
        let order = self.order();
        if order > cap {
            return Err(GroupError::TooLarge { order, cap });
        }
        let mut seen: BTreeSet<Permutation> = BTreeSet::new();
        seen.insert(Permutation::identity(self.degree));
        let mut frontier: VecDeque<Permutation> = seen.iter().cloned().collect();
        while let Some(g) = frontier.pop_front() {
            for s in &self.generators {
                let next = g.then(s);
                if seen.insert(next.clone()) {
                    frontier.push_back(next);
                }
            }
        }
        debug_assert_eq!(seen.len() as u128, order);
        Ok(seen.into_iter().collect())
    }

    /// Smallest normal subgroup of `self` containing every element of `elts`.
    pub fn normal_closure_of_set(&self, elts: &[Permutation]) -> Result<PermGroup, GroupError> {
        for g in elts {
            if !self.membership(g)? {
                return Err(GroupError::NotInGroup);
            }
        }
        let mut closure_gens: Vec<Permutation> = Vec::new();
        for g in elts {
            if !g.is_identity() && !closure_gens.contains(g) {
                closure_gens.push(g.clone());
            }
        }
        loop {
            let h = PermGroup::new(self.degree, closure_gens.clone())?;
            let mut fresh: Vec<Permutation> = Vec::new();
            for g in &closure_gens {
                for s in &self.generators {
                    let c = g.conjugated_by(s);
                    if !h.contains(&c) && !fresh.contains(&c) {
                        fresh.push(c);
                    }
                }
            }
            if fresh.is_empty() {
                return Ok(h);
            }
            closure_gens.extend(fresh);
        }
    }

    /// Smallest normal subgroup containing `g`. Errors when `g` is not in the
    /// group.
    pub fn normal_closure(&self, g: &Permutation) -> Result<PermGroup, GroupError> {
        self.normal_closure_of_set(std::slice::from_ref(g))
    }

    /// True when the group equals its own derived subgroup.
    pub fn is_perfect(&self) -> bool {
        if self.generators.is_empty() {
            // Trivial group is perfect by convention (H_1 = 0).
            return true;
        }
        let mut comms = Vec::new();
        for a in &self.generators {
            for b in &self.generators {
                let c = Permutation::commutator(a, b);
                if !c.is_identity() && !comms.contains(&c) {
                    comms.push(c);
                }
            }
        }
        let derived = self
            .normal_closure_of_set(&comms)
            .expect("commutators of generators are members");
        derived.order() == self.order()
    }

    /// Simplicity test: every non-identity conjugacy class representative
    /// must normally generate the whole group. Representatives are found by
    /// seeded random sampling until the class sizes account for the full
    /// group order, so the answer is exact, not probabilistic.
    pub fn is_simple(&self, order_bound: u128, seed: u64) -> Result<bool, GroupError> {
        let order = self.order();
        if order > order_bound {
            return Err(GroupError::OrderExceedsBound {
                order,
                bound: order_bound,
            });
        }
        if order == 1 {
            return Ok(false);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut covered: BTreeSet<Permutation> = BTreeSet::new();
        covered.insert(Permutation::identity(self.degree));
        let mut reps: Vec<Permutation> = Vec::new();
        while (covered.len() as u128) < order {
            let g = self.random_element(&mut rng);
            if covered.contains(&g) {
                continue;
            }
            let class = self.conjugacy_class_of(&g);
            reps.push(class.iter().min().cloned().expect("class nonempty"));
            covered.extend(class);
        }
        for rep in &reps {
            if self.normal_closure(rep)?.order() != order {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn conjugacy_class_of(&self, g: &Permutation) -> BTreeSet<Permutation> {
        let mut class: BTreeSet<Permutation> = BTreeSet::new();
        class.insert(g.clone());
        let mut frontier = VecDeque::new();
        frontier.push_back(g.clone());
        while let Some(x) = frontier.pop_front() {
            for s in &self.generators {
                let c = x.conjugated_by(s);
                if class.insert(c.clone()) {
                    frontier.push_back(c);
                }
            }
        }
        class
    }
}

impl Bsgs {
    fn build(degree: usize, generators: &[Permutation]) -> Bsgs {
        let strong_gens: Vec<Permutation> = generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        let mut bsgs = Bsgs {
            base: Vec::new(),
            strong_gens,
            levels: Vec::new(),
        };
        if bsgs.strong_gens.is_empty() {
            return bsgs;
        }
        let b0 = bsgs
            .strong_gens
            .iter()
            .filter_map(|g| g.first_moved_point())
            .min()
            .expect("non-identity generator moves a point");
        bsgs.base.push(b0);
        bsgs.levels.push(Level::new(b0, degree));
        bsgs.update_level(0, degree);
        bsgs
    }

    /// Strong generators that fix the first `i` base points, i.e. generators
    /// of the `i`-th group in the stabilizer chain.
    fn gens_at(&self, i: usize) -> Vec<Permutation> {
        self.strong_gens
            .iter()
            .filter(|g| self.base[..i].iter().all(|&b| g.apply(b) == b))
            .cloned()
            .collect()
    }

    fn recompute_orbit(&mut self, i: usize, degree: usize) {
        let gens = self.gens_at(i);
        let level = &mut self.levels[i];
        level.orbit.clear();
        level.transversal.clear();
        level.orbit.push(level.point);
        level
            .transversal
            .insert(level.point, Permutation::identity(degree));
        let mut head = 0;
        while head < level.orbit.len() {
            let pt = level.orbit[head];
            head += 1;
            let u = level.transversal[&pt].clone();
            for s in &gens {
                let img = s.apply(pt);
                if !level.transversal.contains_key(&img) {
                    level.transversal.insert(img, u.then(s));
                    level.orbit.push(img);
                }
            }
        }
    }

    /// Sifts `g` through levels `from..`, returning the residue and the level
    /// where sifting stopped (`levels.len()` if it ran off the end).
    fn sift(&self, g: &Permutation, from: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for i in from..self.levels.len() {
            let pt = h.apply(self.levels[i].point);
            match self.levels[i].transversal.get(&pt) {
                None => return (h, i),
                Some(u) => h = h.then(&u.inverse()),
            }
        }
        (h, self.levels.len())
    }

    /// Verifies level `i`: recomputes its orbit and ensures every Schreier
    /// generator sifts to the identity through the deeper levels, extending
    /// the strong generating set (and possibly the base) where it does not.
    fn update_level(&mut self, i: usize, degree: usize) {
        'outer: loop {
            self.recompute_orbit(i, degree);
            let gens = self.gens_at(i);
            let orbit = self.levels[i].orbit.clone();
            for pt in orbit {
                let u_pt = self.levels[i].transversal[&pt].clone();
                for s in &gens {
                    let target = s.apply(pt);
                    let u_t = self.levels[i].transversal[&target]
                        .clone();
                    let schreier = u_pt.then(s).then(&u_t.inverse());
                    if schreier.is_identity() {
                        continue;
                    }
                    let (residue, stuck) = self.sift(&schreier, i + 1);
                    if residue.is_identity() {
                        continue;
                    }
                    if stuck == self.levels.len() {
                        let b = residue
                            .first_moved_point()
                            .expect("non-identity residue moves a point");
                        self.base.push(b);
                        self.levels.push(Level::new(b, degree));
                    }
                    self.strong_gens.push(residue);
                    for k in ((i + 1)..=stuck.min(self.levels.len() - 1)).rev() {
                        self.update_level(k, degree);
                    }
                    continue 'outer;
                }
            }
            break;
        }
    }
}

impl Level {
    fn new(point: usize, degree: usize) -> Level {
        let mut transversal = BTreeMap::new();
        transversal.insert(point, Permutation::identity(degree));
        Level {
            point,
            orbit: vec![point],
            transversal,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn symmetric(n: usize) -> PermGroup {
        let cycle = Permutation::from_cycles(n, &[(0..n).collect()]).unwrap();
        let swap = Permutation::from_cycles(n, &[vec![0, 1]]).unwrap();
        PermGroup::new(n, vec![cycle, swap]).unwrap()
    }

    #[test]
    fn trivial_group() {
        let g = PermGroup::trivial(5);
        assert_eq!(g.order(), 1);
        assert!(g.contains(&Permutation::identity(5)));
        assert!(!g.contains(&Permutation::from_cycles(5, &[vec![0, 1]]).unwrap()));
    }

    #[test]
    fn symmetric_group_orders() {
        for n in 2..=7 {
            assert_eq!(symmetric(n).order(), (1..=n as u128).product::<u128>());
        }
    }

    #[test]
    fn alternating_group_membership_respects_parity() {
        // A4 = <(0 1 2), (1 2 3)>
        let a = Permutation::from_cycles(4, &[vec![0, 1, 2]]).unwrap();
        let b = Permutation::from_cycles(4, &[vec![1, 2, 3]]).unwrap();
        let a4 = PermGroup::new(4, vec![a.clone(), b]).unwrap();
        assert_eq!(a4.order(), 12);
        assert!(a4.contains(&a));
        let odd = Permutation::from_cycles(4, &[vec![0, 1]]).unwrap();
        assert_eq!(odd.sign(), -1);
        assert!(!a4.contains(&odd));
    }

    #[test]
    fn generators_are_members() {
        let g = symmetric(6);
        for s in g.generators() {
            assert!(g.contains(s));
        }
        assert!(g.contains(&Permutation::identity(6)));
    }

    #[test]
    fn normal_closure_in_s4() {
        let s4 = symmetric(4);
        // A transposition normally generates all of S4.
        let t = Permutation::from_cycles(4, &[vec![0, 1]]).unwrap();
        assert_eq!(s4.normal_closure(&t).unwrap().order(), 24);
        // A double transposition generates the Klein four-group.
        let v = Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(s4.normal_closure(&v).unwrap().order(), 4);
        // The identity generates the trivial subgroup.
        assert_eq!(s4.normal_closure(&Permutation::identity(4)).unwrap().order(), 1);
        // Normality: conjugates of closure generators stay inside.
        let k = s4.normal_closure(&v).unwrap();
        for h in k.generators() {
            for s in s4.generators() {
                assert!(k.contains(&h.conjugated_by(s)));
            }
        }
    }

    #[test]
    fn closure_of_non_member_is_an_error() {
        let a4 = PermGroup::new(
            4,
            vec![
                Permutation::from_cycles(4, &[vec![0, 1, 2]]).unwrap(),
                Permutation::from_cycles(4, &[vec![1, 2, 3]]).unwrap(),
            ],
        )
        .unwrap();
        let odd = Permutation::from_cycles(4, &[vec![0, 1]]).unwrap();
        assert!(matches!(
            a4.normal_closure(&odd),
            Err(GroupError::NotInGroup)
        ));
    }

    #[test]
    fn a5_is_simple_and_s4_is_not() {
        let a = Permutation::from_cycles(5, &[vec![0, 1, 2]]).unwrap();
        let b = Permutation::from_cycles(5, &[vec![0, 1, 2, 3, 4]]).unwrap();
        let a5 = PermGroup::new(5, vec![a, b]).unwrap();
        assert_eq!(a5.order(), 60);
        assert!(a5.is_simple(10_000_000, 1).unwrap());
        assert!(!symmetric(4).is_simple(10_000_000, 1).unwrap());
        // Z/6 as a permutation group: abelian non-prime order, not simple.
        let z6 = PermGroup::new(
            6,
            vec![Permutation::from_cycles(6, &[(0..6).collect()]).unwrap()],
        )
        .unwrap();
        assert!(!z6.is_simple(10_000_000, 1).unwrap());
    }

    #[test]
    fn simplicity_bound_is_enforced() {
        let s5 = symmetric(5);
        assert!(matches!(
            s5.is_simple(100, 1),
            Err(GroupError::OrderExceedsBound { order: 120, bound: 100 })
        ));
    }

    #[test]
    fn element_enumeration_is_sorted_and_capped() {
        let s3 = symmetric(3);
        let elts = s3.elements_capped(10).unwrap();
        assert_eq!(elts.len(), 6);
        assert_eq!(elts[0], Permutation::identity(3));
        assert!(s3.elements_capped(5).is_err());
    }

    #[test]
    fn random_elements_are_members_and_reproducible() {
        let g = symmetric(5);
        let mut r1 = ChaCha8Rng::seed_from_u64(42);
        let mut r2 = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..20 {
            let x = g.random_element(&mut r1);
            assert!(g.contains(&x));
            assert_eq!(x, g.random_element(&mut r2));
        }
    }

    #[test]
    fn perfect_groups() {
        let a = Permutation::from_cycles(5, &[vec![0, 1, 2]]).unwrap();
        let b = Permutation::from_cycles(5, &[vec![0, 1, 2, 3, 4]]).unwrap();
        let a5 = PermGroup::new(5, vec![a, b]).unwrap();
        assert!(a5.is_perfect());
        assert!(!symmetric(4).is_perfect());
    }
}

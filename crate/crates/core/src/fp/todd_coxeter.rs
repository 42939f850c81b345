use std::collections::VecDeque;

use thiserror::Error;

use super::presentation::Presentation;

const UNDEF: u32 = u32::MAX;

/// Budget exhausted: the enumeration needed more cosets than allowed. This
/// means "not proven finite at this budget", never "infinite".
#[derive(Debug, Error, PartialEq, Eq)]
#[error("coset table exceeded the budget of {max_cosets} cosets")]
pub struct Overflow {
    pub max_cosets: usize,
}

/// A complete, collapsed coset table for the group acting on its own cosets
/// over the trivial subgroup: row `c`, column `2g` is `c · g`, column
/// `2g + 1` is `c · g^-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    num_generators: usize,
    rows: Vec<Vec<u32>>,
}

impl CosetTable {
    pub fn num_cosets(&self) -> usize {
        self.rows.len()
    }

    pub fn num_generators(&self) -> usize {
        self.num_generators
    }

    pub fn apply(&self, coset: usize, gen: usize, inverted: bool) -> usize {
        self.rows[coset][2 * gen + usize::from(inverted)] as usize
    }

    /// The permutation action of one generator on the cosets, as an image
    /// vector (the regular representation of the enumerated group).
    pub fn action_of(&self, gen: usize) -> Vec<usize> {
        (0..self.num_cosets()).map(|c| self.apply(c, gen, false)).collect()
    }
}

/// Successful enumeration: the group order and the coset table.
#[derive(Clone, Debug)]
pub struct Enumeration {
    pub order: usize,
    pub table: CosetTable,
}

struct Enumerator {
    num_symbols: usize,
    table: Vec<Vec<u32>>,   // rows indexed by coset, columns by symbol
    parent: Vec<u32>,       // union-find over cosets
    live: usize,
    max_cosets: usize,
    relators: Vec<Vec<u32>>, // relator words as symbol strings
}

fn inv_symbol(s: u32) -> u32 {
    s ^ 1
}

impl Enumerator {
    fn new(p: &Presentation, max_cosets: usize) -> Self {
        let num_symbols = 2 * p.num_generators();
        let relators: Vec<Vec<u32>> = p
            .relators()
            .iter()
            .map(|w| {
                w.steps()
                    .map(|(g, inverted)| (2 * g + usize::from(inverted)) as u32)
                    .collect()
            })
            .collect();
        Enumerator {
            num_symbols,
            table: vec![vec![UNDEF; num_symbols]],
            parent: vec![0],
            live: 1,
            max_cosets,
            relators,
        }
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut cur = c;
        while self.parent[cur as usize] != root {
            let next = self.parent[cur as usize];
            self.parent[cur as usize] = root;
            cur = next;
        }
        root
    }

    fn is_live(&mut self, c: u32) -> bool {
        self.rep(c) == c
    }

    fn lookup(&mut self, c: u32, s: u32) -> u32 {
        let d = self.table[c as usize][s as usize];
        if d == UNDEF {
            UNDEF
        } else {
            self.rep(d)
        }
    }

    fn set_edge(&mut self, a: u32, s: u32, b: u32) {
        self.table[a as usize][s as usize] = b;
        self.table[b as usize][inv_symbol(s) as usize] = a;
    }

    fn new_coset(&mut self) -> Option<u32> {
        if self.table.len() >= self.max_cosets {
            return None;
        }
        let idx = self.table.len() as u32;
        self.table.push(vec![UNDEF; self.num_symbols]);
        self.parent.push(idx);
        self.live += 1;
        Some(idx)
    }

    fn join(&mut self, a: u32, b: u32, dead: &mut VecDeque<u32>) {
        let a = self.rep(a);
        let b = self.rep(b);
        if a == b {
            return;
        }
        let (keep, kill) = if a < b { (a, b) } else { (b, a) };
        self.parent[kill as usize] = keep;
        self.live -= 1;
        dead.push_back(kill);
    }

    /// Merges two cosets and transfers every edge of each dead coset onto its
    /// representative, queueing any secondary coincidences discovered.
    fn coincide(&mut self, a: u32, b: u32) {
        let mut dead = VecDeque::new();
        self.join(a, b, &mut dead);
        while let Some(kill) = dead.pop_front() {
            for s in 0..self.num_symbols as u32 {
                let d = self.table[kill as usize][s as usize];
                if d == UNDEF {
                    continue;
                }
                self.table[kill as usize][s as usize] = UNDEF;
                let keep = self.rep(kill);
                let d_rep = self.rep(d);
                let existing = self.table[keep as usize][s as usize];
                if existing == UNDEF {
                    self.table[keep as usize][s as usize] = d_rep;
                } else {
                    let e = self.rep(existing);
                    self.join(e, d_rep, &mut dead);
                }
                let d_rep = self.rep(d_rep);
                let keep = self.rep(keep);
                let existing_rev = self.table[d_rep as usize][inv_symbol(s) as usize];
                if existing_rev == UNDEF {
                    self.table[d_rep as usize][inv_symbol(s) as usize] = keep;
                } else {
                    let e = self.rep(existing_rev);
                    self.join(e, keep, &mut dead);
                }
            }
        }
    }

    /// Scans relator `w` at coset `alpha`, defining cosets to fill gaps when
    /// `fill` is set (HLT). Returns false on budget exhaustion.
    fn scan(&mut self, alpha: u32, w_idx: usize, fill: bool) -> bool {
        let w = self.relators[w_idx].clone();
        let r = w.len();
        let mut f = self.rep(alpha);
        let mut i = 0usize;
        let mut b = f;
        let mut j = r;
        loop {
            while i < j {
                let next = self.lookup(f, w[i]);
                if next == UNDEF {
                    break;
                }
                f = next;
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincide(f, b);
                }
                return true;
            }
            while j > i {
                let next = self.lookup(b, inv_symbol(w[j - 1]));
                if next == UNDEF {
                    break;
                }
                b = next;
                j -= 1;
            }
            if j == i {
                if f != b {
                    self.coincide(f, b);
                }
                return true;
            }
            if j == i + 1 {
                // Deduction: the single undefined edge is forced.
                self.set_edge(f, w[i], b);
                return true;
            }
            if !fill {
                return true; // lookahead mode: no definitions
            }
            let Some(d) = self.new_coset() else {
                return false;
            };
            self.set_edge(f, w[i], d);
            // continue the forward scan through the fresh coset
        }
    }

    /// One full pass of relator scans over all live cosets without any new
    /// definitions; returns the number of cosets saved by coincidences.
    fn lookahead(&mut self) -> usize {
        let before = self.live;
        let mut c = 0u32;
        while (c as usize) < self.table.len() {
            if self.is_live(c) {
                for w_idx in 0..self.relators.len() {
                    self.scan(c, w_idx, false);
                    if !self.is_live(c) {
                        break;
                    }
                }
            }
            c += 1;
        }
        before - self.live
    }

    /// Renumbers live cosets to 0..live, dropping dead rows, and returns the
    /// new index of each old coset so the scan pointer can be preserved.
    fn compact(&mut self) -> Vec<u32> {
        let n = self.table.len();
        let mut new_index = vec![UNDEF; n];
        let mut next = 0u32;
        for c in 0..n as u32 {
            if self.rep(c) == c {
                new_index[c as usize] = next;
                next += 1;
            }
        }
        let mut rows = Vec::with_capacity(next as usize);
        for c in 0..n as u32 {
            if new_index[c as usize] == UNDEF {
                continue;
            }
            let old_row = self.table[c as usize].clone();
            let row = old_row
                .into_iter()
                .map(|d| {
                    if d == UNDEF {
                        UNDEF
                    } else {
                        new_index[self.rep(d) as usize]
                    }
                })
                .collect();
            rows.push(row);
        }
        self.table = rows;
        self.parent = (0..next).collect();
        debug_assert_eq!(self.live, next as usize);
        new_index
    }
}

/// Todd–Coxeter coset enumeration over the trivial subgroup, HLT strategy
/// with lookahead and a fixed deterministic processing order. On success the
/// number of cosets is the order of the presented group.
pub fn todd_coxeter(p: &Presentation, max_cosets: usize) -> Result<Enumeration, Overflow> {
    assert!(max_cosets >= 1, "need a positive coset budget");
    let mut e = Enumerator::new(p, max_cosets);
    let mut scan_ptr: u32 = 0;
    loop {
        // Find the next live, unprocessed coset.
        while (scan_ptr as usize) < e.table.len() && !e.is_live(scan_ptr) {
            scan_ptr += 1;
        }
        if scan_ptr as usize >= e.table.len() {
            break;
        }
        let c = scan_ptr;
        let mut overflowed = false;
        for w_idx in 0..e.relators.len() {
            if !e.is_live(c) {
                break;
            }
            if !e.scan(c, w_idx, true) {
                overflowed = true;
                break;
            }
        }
        // Complete the row so every (coset, symbol) is eventually defined,
        // which also drives enumeration for generators absent from relators.
        if !overflowed && e.is_live(c) {
            for s in 0..e.num_symbols as u32 {
                if !e.is_live(c) {
                    break;
                }
                let cr = e.rep(c);
                if e.lookup(cr, s) == UNDEF {
                    match e.new_coset() {
                        Some(d) => e.set_edge(cr, s, d),
                        None => {
                            overflowed = true;
                            break;
                        }
                    }
                }
            }
        }
        if overflowed {
            // Lookahead: maybe pending coincidences free enough space.
            if e.lookahead() == 0 {
                return Err(Overflow { max_cosets });
            }
            let new_index = e.compact();
            // Resume from the first surviving unprocessed coset.
            let mut resumed = e.live as u32;
            for old in scan_ptr as usize..new_index.len() {
                if new_index[old] != UNDEF {
                    resumed = new_index[old];
                    break;
                }
            }
            scan_ptr = resumed;
            continue;
        }
        scan_ptr += 1;
    }

    e.compact();
    let order = e.live;
    let num_generators = e.num_symbols / 2;

    // Final verification: the collapsed table is complete and every relator
    // closes at every coset.
    for row in &e.table {
        for &d in row {
            assert!(d != UNDEF, "incomplete coset table after enumeration");
            assert!((d as usize) < order, "dangling coset reference");
        }
    }
    for c in 0..order as u32 {
        for w in &e.relators {
            let mut x = c;
            for &s in w {
                x = e.table[x as usize][s as usize];
            }
            assert_eq!(x, c, "relator does not close in the final table");
        }
    }

    Ok(Enumeration {
        order,
        table: CosetTable {
            num_generators,
            rows: e.table,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::word::Word;
    use crate::fp::Presentation;

    fn enumerate(p: &Presentation) -> usize {
        match todd_coxeter(p, 1_000_000) {
            Ok(e) => e.order,
            Err(o) => panic!("unexpected overflow: {o}"),
        }
    }

    #[test]
    fn cyclic_five() {
        let mut p = Presentation::with_names(vec!["a"]).unwrap();
        p.add_relator(Word::gen_pow(0, 5)).unwrap();
        assert_eq!(enumerate(&p), 5);
    }

    #[test]
    fn symmetric_three() {
        // <a, b | a^2, b^2, (ab)^3>
        let mut p = Presentation::with_names(vec!["a", "b"]).unwrap();
        p.add_relator(Word::gen_pow(0, 2)).unwrap();
        p.add_relator(Word::gen_pow(1, 2)).unwrap();
        p.add_relator(Word::gen(0).concat(&Word::gen(1)).pow(3)).unwrap();
        assert_eq!(enumerate(&p), 6);
    }

    #[test]
    fn quaternion_eight() {
        // <a, b | a^4, a^2 b^-2, b^-1 a b a>
        let mut p = Presentation::with_names(vec!["a", "b"]).unwrap();
        p.add_relator(Word::gen_pow(0, 4)).unwrap();
        p.add_relator(Word::gen_pow(0, 2).concat(&Word::gen_pow(1, -2)))
            .unwrap();
        p.add_relator(
            Word::gen_pow(1, -1)
                .concat(&Word::gen(0))
                .concat(&Word::gen(1))
                .concat(&Word::gen(0)),
        )
        .unwrap();
        assert_eq!(enumerate(&p), 8);
    }

    #[test]
    fn heisenberg_mod_two_has_order_eight() {
        // <a, b, z | [a,b] z^-1, [a,z], [b,z], a^2, b^2, z^2>
        let mut p = Presentation::with_names(vec!["a", "b", "z"]).unwrap();
        p.add_relator(
            Word::commutator(&Word::gen(0), &Word::gen(1)).concat(&Word::gen_pow(2, -1)),
        )
        .unwrap();
        p.add_relator(Word::commutator(&Word::gen(0), &Word::gen(2)))
            .unwrap();
        p.add_relator(Word::commutator(&Word::gen(1), &Word::gen(2)))
            .unwrap();
        p.add_relator(Word::gen_pow(0, 2)).unwrap();
        p.add_relator(Word::gen_pow(1, 2)).unwrap();
        p.add_relator(Word::gen_pow(2, 2)).unwrap();
        assert_eq!(enumerate(&p), 8);
    }

    #[test]
    fn free_generator_overflows_budget() {
        let p = Presentation::with_names(vec!["x"]).unwrap();
        match todd_coxeter(&p, 100) {
            Err(Overflow { max_cosets: 100 }) => {}
            other => panic!("expected overflow, got {other:?}"),
        }
    }

    #[test]
    fn table_action_is_a_permutation_closing_relators() {
        let mut p = Presentation::with_names(vec!["a"]).unwrap();
        p.add_relator(Word::gen_pow(0, 6)).unwrap();
        let res = todd_coxeter(&p, 1000).unwrap();
        assert_eq!(res.order, 6);
        let action = res.table.action_of(0);
        let mut seen = vec![false; 6];
        for &img in &action {
            assert!(!seen[img]);
            seen[img] = true;
        }
        // a^6 closes from every coset
        for start in 0..6 {
            let mut c = start;
            for _ in 0..6 {
                c = action[c];
            }
            assert_eq!(c, start);
        }
    }

    #[test]
    fn deterministic_table() {
        let mut p = Presentation::with_names(vec!["a", "b"]).unwrap();
        p.add_relator(Word::gen_pow(0, 3)).unwrap();
        p.add_relator(Word::gen_pow(1, 2)).unwrap();
        p.add_relator(Word::gen(0).concat(&Word::gen(1)).pow(2)).unwrap();
        let t1 = todd_coxeter(&p, 1000).unwrap();
        let t2 = todd_coxeter(&p, 1000).unwrap();
        assert_eq!(t1.table, t2.table);
        assert_eq!(t1.order, 6); // S3 again, via the dihedral presentation
    }
}

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::linalg::{smith_normal_form, AbelianGroupStructure, SparseIntMatrix};

use super::word::Word;

/// A finite presentation `< generators | relators >` with optional named
/// marked elements (for example the meridian `mu`). Generators carry names so
/// that the text format is readable and round-trips exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    names: Vec<String>,
    relators: Vec<Word>,
    marked: BTreeMap<String, Word>,
}

#[derive(Debug, Error)]
pub enum PresentationError {
    #[error("generator index {index} out of range (have {num} generators)")]
    GeneratorOutOfRange { index: usize, num: usize },
    #[error("relator reduces to the identity word")]
    TrivialRelator,
    #[error("duplicate generator name `{0}`")]
    DuplicateName(String),
    #[error("invalid generator name `{0}`")]
    InvalidName(String),
}

#[derive(Debug, Error)]
pub enum PresentationParseError {
    #[error("line {0}: {1}")]
    Syntax(usize, String),
    #[error("missing `gens N` header")]
    MissingHeader,
    #[error(transparent)]
    Invalid(#[from] PresentationError),
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Presentation {
    /// A presentation of the free group of the given rank, with default
    /// generator names `g0, g1, ...`.
    pub fn free(num_generators: usize) -> Self {
        Presentation {
            names: (0..num_generators).map(|i| format!("g{i}")).collect(),
            relators: Vec::new(),
            marked: BTreeMap::new(),
        }
    }

    /// A free presentation with explicit generator names.
    pub fn with_names<S: Into<String>>(names: Vec<S>) -> Result<Self, PresentationError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut seen = BTreeMap::new();
        for n in &names {
            if !valid_name(n) {
                return Err(PresentationError::InvalidName(n.clone()));
            }
            if seen.insert(n.clone(), ()).is_some() {
                return Err(PresentationError::DuplicateName(n.clone()));
            }
        }
        Ok(Presentation {
            names,
            relators: Vec::new(),
            marked: BTreeMap::new(),
        })
    }

    pub fn num_generators(&self) -> usize {
        self.names.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.names
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn marked_elements(&self) -> &BTreeMap<String, Word> {
        &self.marked
    }

    pub fn marked(&self, name: &str) -> Option<&Word> {
        self.marked.get(name)
    }

    fn check_word(&self, w: &Word) -> Result<(), PresentationError> {
        if let Some(g) = w.max_gen() {
            if g >= self.num_generators() {
                return Err(PresentationError::GeneratorOutOfRange {
                    index: g,
                    num: self.num_generators(),
                });
            }
        }
        Ok(())
    }

    pub fn add_relator(&mut self, w: Word) -> Result<(), PresentationError> {
        self.check_word(&w)?;
        if w.is_identity() {
            return Err(PresentationError::TrivialRelator);
        }
        self.relators.push(w);
        Ok(())
    }

    pub fn mark(&mut self, name: &str, w: Word) -> Result<(), PresentationError> {
        self.check_word(&w)?;
        if !valid_name(name) {
            return Err(PresentationError::InvalidName(name.to_string()));
        }
        self.marked.insert(name.to_string(), w);
        Ok(())
    }

    /// Abelianization via the Smith normal form of the relation matrix, plus
    /// canonical coordinates for every marked element.
    pub fn abelianization(&self) -> (AbelianGroupStructure, BTreeMap<String, AbelianizedMark>) {
        let g = self.num_generators();
        let r = self.relators.len();
        // Columns of A are the relator exponent vectors: the relation lattice
        // in Z^g is im(A), and the abelianization is Z^g / im(A).
        let mut a = SparseIntMatrix::zero(g, r);
        for (j, rel) in self.relators.iter().enumerate() {
            for (i, e) in rel.exponent_sums(g).into_iter().enumerate() {
                if e != 0 {
                    a.set(i, j, BigInt::from(e));
                }
            }
        }
        let snf = smith_normal_form(&a, true);
        let (u, _v) = snf.transforms.expect("transforms requested");
        let structure =
            AbelianGroupStructure::new(g - snf.rank, snf.diagonal.iter().cloned());

        // In the basis U, the quotient splits as ⊕ Z/d_i ⊕ Z^(g - rank): the
        // class of v has coordinates U·v, reduced mod d_i on the torsion part.
        let nontrivial: Vec<(usize, BigInt)> = snf
            .diagonal
            .iter()
            .enumerate()
            .filter(|(_, d)| **d != BigInt::from(1))
            .map(|(i, d)| (i, d.clone()))
            .collect();
        let marks = self
            .marked
            .iter()
            .map(|(name, w)| {
                let v: Vec<BigInt> = w
                    .exponent_sums(g)
                    .into_iter()
                    .map(BigInt::from)
                    .collect();
                let coords = u.mul_vec(&v);
                let torsion_coords: Vec<BigInt> = nontrivial
                    .iter()
                    .map(|(i, d)| {
                        let c = &coords[*i] % d;
                        if c < BigInt::zero() {
                            c + d
                        } else {
                            c
                        }
                    })
                    .collect();
                let free_coords: Vec<BigInt> = coords[snf.rank..].to_vec();
                (
                    name.clone(),
                    AbelianizedMark {
                        torsion_coords,
                        free_coords,
                    },
                )
            })
            .collect();
        (structure, marks)
    }

    /// Canonical text serialization. The format round-trips bit-exactly
    /// through [`parse`](Self::parse):
    ///
    /// ```text
    /// gens 3
    /// names a1 b1 z
    /// a1 b1 a1^-1 b1^-1 z^-1
    /// mark mu = z
    /// ```
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "gens {}", self.num_generators());
        if self.num_generators() > 0 {
            let _ = writeln!(out, "names {}", self.names.join(" "));
        }
        for rel in &self.relators {
            let _ = writeln!(out, "{}", self.word_to_text(rel));
        }
        for (name, w) in &self.marked {
            let _ = writeln!(out, "mark {} = {}", name, self.word_to_text(w));
        }
        out
    }

    pub fn word_to_text(&self, w: &Word) -> String {
        w.letters()
            .iter()
            .map(|l| {
                if l.exp == 1 {
                    self.names[l.gen].clone()
                } else {
                    format!("{}^{}", self.names[l.gen], l.exp)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses the text format. The `names` line is optional; without it,
    /// generator names are registered in order of first appearance.
    pub fn parse(text: &str) -> Result<Presentation, PresentationParseError> {
        let mut num_generators: Option<usize> = None;
        let mut names: Vec<String> = Vec::new();
        let mut names_fixed = false;
        let mut relator_lines: Vec<(usize, &str)> = Vec::new();
        let mut mark_lines: Vec<(usize, &str)> = Vec::new();

        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let lineno = idx + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("gens ") {
                let n: usize = rest.trim().parse().map_err(|_| {
                    PresentationParseError::Syntax(lineno, "bad generator count".into())
                })?;
                num_generators = Some(n);
            } else if let Some(rest) = line.strip_prefix("names ") {
                names = rest.split_whitespace().map(str::to_string).collect();
                names_fixed = true;
            } else if line.starts_with("mark ") {
                mark_lines.push((lineno, line));
            } else {
                relator_lines.push((lineno, line));
            }
        }

        let n = num_generators.ok_or(PresentationParseError::MissingHeader)?;
        if names_fixed && names.len() != n {
            return Err(PresentationParseError::Syntax(
                0,
                format!("names line has {} entries, expected {}", names.len(), n),
            ));
        }

        let mut lookup: BTreeMap<String, usize> = names
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        let mut resolve = |tok_name: &str, lineno: usize| -> Result<usize, PresentationParseError> {
            if let Some(&i) = lookup.get(tok_name) {
                return Ok(i);
            }
            if names_fixed {
                return Err(PresentationParseError::Syntax(
                    lineno,
                    format!("unknown generator `{tok_name}`"),
                ));
            }
            if names.len() >= n {
                return Err(PresentationParseError::Syntax(
                    lineno,
                    format!("more than {n} distinct generator names"),
                ));
            }
            names.push(tok_name.to_string());
            lookup.insert(tok_name.to_string(), names.len() - 1);
            Ok(names.len() - 1)
        };

        let mut parse_word = |tokens: &str, lineno: usize| -> Result<Word, PresentationParseError> {
            let mut syllables: Vec<(usize, i64)> = Vec::new();
            for tok in tokens.split_whitespace() {
                let (name, exp) = match tok.split_once('^') {
                    Some((name, e)) => {
                        let exp: i64 = e.parse().map_err(|_| {
                            PresentationParseError::Syntax(
                                lineno,
                                format!("bad exponent in `{tok}`"),
                            )
                        })?;
                        (name, exp)
                    }
                    None => (tok, 1),
                };
                if !valid_name(name) {
                    return Err(PresentationParseError::Syntax(
                        lineno,
                        format!("bad generator token `{tok}`"),
                    ));
                }
                syllables.push((resolve(name, lineno)?, exp));
            }
            Ok(Word::from_syllables(syllables))
        };

        let mut relators = Vec::new();
        for (lineno, line) in relator_lines {
            let w = parse_word(line, lineno)?;
            if w.is_identity() {
                return Err(PresentationParseError::Syntax(
                    lineno,
                    "relator reduces to the identity".into(),
                ));
            }
            relators.push(w);
        }
        let mut marked = BTreeMap::new();
        for (lineno, line) in mark_lines {
            let rest = line.strip_prefix("mark ").expect("checked above");
            let (name, word_part) = rest.split_once('=').ok_or_else(|| {
                PresentationParseError::Syntax(lineno, "mark line needs `= word`".into())
            })?;
            let name = name.trim();
            if !valid_name(name) {
                return Err(PresentationParseError::Syntax(
                    lineno,
                    format!("bad mark name `{name}`"),
                ));
            }
            let w = parse_word(word_part, lineno)?;
            marked.insert(name.to_string(), w);
        }

        // Names that never appeared get defaults so the count is honored.
        while names.len() < n {
            let mut i = names.len();
            let name = loop {
                let candidate = format!("g{i}");
                if !lookup.contains_key(&candidate) {
                    break candidate;
                }
                i += 1;
            };
            lookup.insert(name.clone(), names.len());
            names.push(name);
        }

        let mut p = Presentation::with_names(names)?;
        for w in relators {
            p.add_relator(w)?;
        }
        for (name, w) in marked {
            p.mark(&name, w)?;
        }
        Ok(p)
    }
}

/// Canonical coordinates of a marked element in the abelianization
/// `⊕ Z/d_i ⊕ Z^f`: one residue per invariant factor, then the free part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianizedMark {
    pub torsion_coords: Vec<BigInt>,
    pub free_coords: Vec<BigInt>,
}

impl AbelianizedMark {
    /// True when the element generates the (cyclic) torsion subgroup: its
    /// single torsion coordinate is a unit mod the invariant factor.
    pub fn generates_cyclic_torsion(&self, factor: &BigInt) -> bool {
        self.torsion_coords.len() == 1
            && num_integer::Integer::gcd(&self.torsion_coords[0], factor) == BigInt::from(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil_wirtinger() -> Presentation {
        // <x, y | x y x y^-1 x^-1 y^-1>
        let mut p = Presentation::with_names(vec!["x", "y"]).unwrap();
        p.add_relator(Word::from_syllables(vec![
            (0, 1),
            (1, 1),
            (0, 1),
            (1, -1),
            (0, -1),
            (1, -1),
        ]))
        .unwrap();
        p
    }

    #[test]
    fn free_group_abelianization() {
        let p = Presentation::free(2);
        let (h, _) = p.abelianization();
        assert_eq!(h, AbelianGroupStructure::free(2));
    }

    #[test]
    fn trefoil_abelianizes_to_z() {
        let (h, _) = trefoil_wirtinger().abelianization();
        assert_eq!(h, AbelianGroupStructure::free(1));
    }

    #[test]
    fn abelianization_is_independent_of_relator_order() {
        let mut p = Presentation::with_names(vec!["a", "b", "z"]).unwrap();
        let r1 = Word::commutator(&Word::gen(0), &Word::gen(1)).concat(&Word::gen_pow(2, -5));
        let r2 = Word::commutator(&Word::gen(0), &Word::gen(2));
        let r3 = Word::commutator(&Word::gen(1), &Word::gen(2));
        p.add_relator(r1.clone()).unwrap();
        p.add_relator(r2.clone()).unwrap();
        p.add_relator(r3.clone()).unwrap();
        let (h, _) = p.abelianization();

        for order in [[r2.clone(), r3.clone(), r1.clone()], [r3, r1, r2]] {
            let mut q = Presentation::with_names(vec!["a", "b", "z"]).unwrap();
            for rel in order {
                q.add_relator(rel).unwrap();
            }
            assert_eq!(q.abelianization().0, h);
        }
        assert_eq!(h, AbelianGroupStructure::new(2, vec![BigInt::from(5)]));
    }

    #[test]
    fn marked_element_coordinates() {
        // Z/5 presented as <z | z^5>, mu = z: mu generates the torsion.
        let mut p = Presentation::with_names(vec!["z"]).unwrap();
        p.add_relator(Word::gen_pow(0, 5)).unwrap();
        p.mark("mu", Word::gen(0)).unwrap();
        let (h, marks) = p.abelianization();
        assert_eq!(h, AbelianGroupStructure::cyclic(5));
        let m = &marks["mu"];
        assert!(m.generates_cyclic_torsion(&BigInt::from(5)));
        assert!(m.free_coords.is_empty());
    }

    #[test]
    fn text_format_round_trips() {
        let mut p = Presentation::with_names(vec!["a1", "b1", "z"]).unwrap();
        p.add_relator(
            Word::commutator(&Word::gen(0), &Word::gen(1)).concat(&Word::gen_pow(2, -1)),
        )
        .unwrap();
        p.add_relator(Word::commutator(&Word::gen(0), &Word::gen(2)))
            .unwrap();
        p.mark("mu", Word::gen(2)).unwrap();
        let text = p.serialize();
        let q = Presentation::parse(&text).unwrap();
        assert_eq!(p, q);
        assert_eq!(q.serialize(), text);
    }

    #[test]
    fn parse_without_names_line_uses_first_appearance() {
        let text = "gens 2\nx y x y^-1 x^-1 y^-1\nmark mu = x\n";
        let p = Presentation::parse(text).unwrap();
        assert_eq!(p.generator_names(), &["x".to_string(), "y".to_string()]);
        assert_eq!(p.marked("mu"), Some(&Word::gen(0)));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Presentation::parse("x y\n").is_err()); // no header
        assert!(Presentation::parse("gens 1\nx x^-1\n").is_err()); // trivial relator
        assert!(Presentation::parse("gens 1\nnames x\ny\n").is_err()); // unknown name
    }
}

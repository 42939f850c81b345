/// One syllable of a word: a generator index with a nonzero exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: usize,
    pub exp: i64,
}

/// A word in the free group on generators `0..n`, kept freely reduced:
/// adjacent letters always have distinct generator indices and no letter has
/// exponent zero. The empty word is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    /// The word consisting of a single generator.
    pub fn gen(g: usize) -> Self {
        Self::gen_pow(g, 1)
    }

    pub fn gen_pow(g: usize, e: i64) -> Self {
        if e == 0 {
            return Word::identity();
        }
        Word {
            letters: vec![Letter { gen: g, exp: e }],
        }
    }

    /// Builds a word from an arbitrary syllable sequence, freely reducing it.
    pub fn from_syllables<I>(syllables: I) -> Self
    where
        I: IntoIterator<Item = (usize, i64)>,
    {
        let mut letters: Vec<Letter> = Vec::new();
        for (gen, exp) in syllables {
            if exp == 0 {
                continue;
            }
            push_reduced(&mut letters, Letter { gen, exp });
        }
        Word { letters }
    }

    /// Free reduction as a standalone operation. Idempotent; never increases
    /// the letter-count length.
    pub fn free_reduce<I>(syllables: I) -> Self
    where
        I: IntoIterator<Item = (usize, i64)>,
    {
        Self::from_syllables(syllables)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Total length counted with exponent multiplicity.
    pub fn length(&self) -> u64 {
        self.letters.iter().map(|l| l.exp.unsigned_abs()).sum()
    }

    /// Largest generator index appearing, if any.
    pub fn max_gen(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.gen).max()
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter {
                    gen: l.gen,
                    exp: -l.exp,
                })
                .collect(),
        }
    }

    /// Concatenation, reduced at the seam.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        for l in &other.letters {
            push_reduced(&mut letters, *l);
        }
        Word { letters }
    }

    pub fn pow(&self, e: i64) -> Word {
        if e == 0 {
            return Word::identity();
        }
        let base = if e > 0 { self.clone() } else { self.inverse() };
        let mut out = Word::identity();
        for _ in 0..e.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// The commutator `[a, b] = a b a^-1 b^-1`.
    pub fn commutator(a: &Word, b: &Word) -> Word {
        a.concat(b).concat(&a.inverse()).concat(&b.inverse())
    }

    /// Exponent sum of each generator, for the abelianized image.
    pub fn exponent_sums(&self, num_generators: usize) -> Vec<i64> {
        let mut sums = vec![0i64; num_generators];
        for l in &self.letters {
            sums[l.gen] += l.exp;
        }
        sums
    }

    /// Expands the word into single steps `(generator, inverted?)`, for coset
    /// table scanning.
    pub fn steps(&self) -> impl Iterator<Item = (usize, bool)> + '_ {
        self.letters.iter().flat_map(|l| {
            let inverted = l.exp < 0;
            std::iter::repeat((l.gen, inverted)).take(l.exp.unsigned_abs() as usize)
        })
    }
}

fn push_reduced(letters: &mut Vec<Letter>, l: Letter) {
    debug_assert!(l.exp != 0);
    match letters.last_mut() {
        Some(top) if top.gen == l.gen => {
            top.exp += l.exp;
            if top.exp == 0 {
                letters.pop();
            }
        }
        _ => letters.push(l),
    }
}

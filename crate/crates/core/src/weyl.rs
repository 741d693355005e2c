//! Weyl group elements as permutations of the root set, and words in the
//! simple reflections.

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::root_system::{canonical_reflection_word, RootIdx, RootSystem};

/// A Weyl group element, stored as the permutation it induces on root
/// indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootPerm {
    images: Vec<u16>,
}

impl RootPerm {
    pub fn identity(n: usize) -> Self {
        Self { images: (0..n as u16).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Self {
        Self { images: images.into_iter().map(|x| x as u16).collect() }
    }

    pub fn apply(&self, i: RootIdx) -> RootIdx {
        self.images[i] as usize
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &RootPerm) -> RootPerm {
        RootPerm { images: other.images.iter().map(|&j| self.images[j as usize]).collect() }
    }

    pub fn inverse(&self) -> RootPerm {
        let mut images = vec![0u16; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u16;
        }
        RootPerm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    /// The product `s_{l₀} s_{l₁} ⋯` of the letters of `word`.
    pub fn from_word(sys: &RootSystem, word: &WeylWord) -> Result<RootPerm> {
        word.validate(sys)?;
        let mut p = RootPerm::identity(sys.len());
        for &k in &word.letters {
            p = p.compose(sys.simple_reflection(k));
        }
        Ok(p)
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, sys: &RootSystem) -> usize {
        (0..sys.num_positive()).filter(|&i| !sys.is_positive(self.apply(i))).count()
    }

    /// A reduced word, obtained by repeatedly stripping the lowest right
    /// descent.
    pub fn reduced_word(&self, sys: &RootSystem) -> WeylWord {
        let mut w = self.clone();
        let mut rev = Vec::new();
        'outer: loop {
            for k in 0..sys.rank() {
                if !sys.is_positive(w.apply(sys.simple_indices()[k])) {
                    w = w.compose(sys.simple_reflection(k));
                    rev.push(k);
                    continue 'outer;
                }
            }
            break;
        }
        rev.reverse();
        WeylWord::new(rev)
    }
}

/// A word in the simple reflections; letters are 0-based simple-root
/// positions, read left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct WeylWord {
    pub letters: Vec<usize>,
}

impl Serialize for WeylWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.letters.iter().map(|k| k + 1).collect::<Vec<_>>().serialize(s)
    }
}

impl WeylWord {
    pub fn new(letters: Vec<usize>) -> Self {
        Self { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn validate(&self, sys: &RootSystem) -> Result<()> {
        match self.letters.iter().find(|&&k| k >= sys.rank()) {
            Some(k) => Err(Error::Word(format!(
                "letter {} out of range for rank {}",
                k + 1,
                sys.rank()
            ))),
            None => Ok(()),
        }
    }

    /// Parses whitespace- or `·`-separated reflection tokens. Tokens naming
    /// non-simple reflections are expanded into their canonical palindromic
    /// word, so the result may be longer than the number of tokens.
    pub fn parse(sys: &RootSystem, text: &str) -> Result<WeylWord> {
        let mut letters = Vec::new();
        for tok in text.split(|c: char| c.is_whitespace() || c == '·' || c == '*').filter(|t| !t.is_empty()) {
            let idx = sys.parse_reflection(tok).map_err(|e| Error::Word(e.to_string()))?;
            match sys.simple_position(idx) {
                Some(k) => letters.push(k),
                None => letters.extend(canonical_reflection_word(sys, idx).letters),
            }
        }
        Ok(WeylWord { letters })
    }

    /// Parses a product of reflections and returns a reduced word for it.
    pub fn parse_reduced(sys: &RootSystem, text: &str) -> Result<WeylWord> {
        let w = Self::parse(sys, text)?;
        Ok(RootPerm::from_word(sys, &w)?.reduced_word(sys))
    }

    /// Space-separated reflection tokens.
    pub fn render(&self, sys: &RootSystem) -> String {
        self.letters
            .iter()
            .map(|&k| sys.reflection_token(sys.simple_indices()[k]))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Cancels adjacent equal letters until none remain.
    pub fn free_reduce(&self) -> WeylWord {
        let mut out: Vec<usize> = Vec::with_capacity(self.letters.len());
        for &k in &self.letters {
            if out.last() == Some(&k) {
                out.pop();
            } else {
                out.push(k);
            }
        }
        WeylWord { letters: out }
    }

    pub fn is_palindrome(&self) -> bool {
        self.letters.iter().eq(self.letters.iter().rev())
    }
}

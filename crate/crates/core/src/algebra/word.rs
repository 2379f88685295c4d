use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A single boson operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    /// a† (written `d`)
    Creation,
    /// a (written `a`)
    Annihilation,
}

impl Letter {
    pub fn symbol(self) -> char {
        match self {
            Letter::Creation => 'd',
            Letter::Annihilation => 'a',
        }
    }
}

/// An operator product read left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    pub fn empty() -> Self {
        Word::default()
    }

    /// `(a†)^dag a^ann`
    pub fn normal_monomial(dag: usize, ann: usize) -> Self {
        let mut letters = vec![Letter::Creation; dag];
        letters.extend(std::iter::repeat_n(Letter::Annihilation, ann));
        Word { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn creations(&self) -> usize {
        self.letters
            .iter()
            .filter(|&&l| l == Letter::Creation)
            .count()
    }

    pub fn annihilations(&self) -> usize {
        self.letters.len() - self.creations()
    }

    /// True when no annihilation stands left of a creation.
    pub fn is_normal(&self) -> bool {
        self.letters
            .windows(2)
            .all(|w| !(w[0] == Letter::Annihilation && w[1] == Letter::Creation))
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn repeat(&self, n: usize) -> Word {
        Word {
            letters: self.letters.repeat(n),
        }
    }

    /// All words of exactly `len` letters, in lexicographic order with `d < a`.
    pub fn all_of_length(len: usize) -> impl Iterator<Item = Word> {
        (0u64..1u64 << len).map(move |bits| {
            Word::new(
                (0..len)
                    .map(|i| {
                        if bits >> (len - 1 - i) & 1 == 0 {
                            Letter::Creation
                        } else {
                            Letter::Annihilation
                        }
                    })
                    .collect(),
            )
        })
    }

    /// All words of length at most `max_len` (2^(max_len+1) − 1 of them).
    pub fn all_up_to(max_len: usize) -> impl Iterator<Item = Word> {
        (0..=max_len).flat_map(Word::all_of_length)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word {
            letters: iter.into_iter().collect(),
        }
    }
}

/// Parse a word: `term*` with `term := ("a" | "d") ("^" posint)?`, whitespace ignored.
pub fn parse_word(text: &str) -> Result<Word> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut letters = Vec::new();
    let mut i = 0;
    let skip_ws = |i: &mut usize| {
        while *i < chars.len() && chars[*i].1.is_whitespace() {
            *i += 1;
        }
    };
    loop {
        skip_ws(&mut i);
        let Some(&(pos, c)) = chars.get(i) else { break };
        let letter = match c {
            'a' => Letter::Annihilation,
            'd' => Letter::Creation,
            other => {
                return Err(Error::Syntax {
                    pos,
                    msg: format!("unexpected character {other:?}, expected 'a' or 'd'"),
                })
            }
        };
        i += 1;
        skip_ws(&mut i);
        let mut count = 1usize;
        if let Some(&(caret_pos, '^')) = chars.get(i) {
            i += 1;
            skip_ws(&mut i);
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            if start == i {
                let pos = chars.get(i).map_or(text.len(), |&(p, _)| p);
                return Err(Error::Syntax {
                    pos,
                    msg: "expected a positive integer after '^'".into(),
                });
            }
            let digits: String = chars[start..i].iter().map(|&(_, c)| c).collect();
            count = digits.parse().map_err(|_| Error::Syntax {
                pos: chars[start].0,
                msg: format!("exponent {digits} is too large"),
            })?;
            if count == 0 {
                return Err(Error::ZeroExponent { pos: caret_pos });
            }
        }
        letters.extend(std::iter::repeat_n(letter, count));
    }
    Ok(Word { letters })
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_word(s)
    }
}

impl fmt::Display for Word {
    /// Run-length form, e.g. `d^2 a d a d^4 a`; the empty word prints as nothing.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for run in self.letters.chunk_by(|x, y| x == y) {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{}", run[0].symbol())?;
            if run.len() > 1 {
                write!(f, "^{}", run.len())?;
            }
        }
        Ok(())
    }
}

//! Monoid presentations with homogeneous defining relations.
//!
//! A presentation lists named generators and relation chains. A chain is a
//! list of two or more words declared pairwise equal; all words in a chain
//! must have the same length. Homogeneity makes word length a monoid
//! invariant, which is what lets the table builder close each length level
//! exactly.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

/// A word over the generators, stored as generator indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<u16>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u16] {
        &self.0
    }
}

impl From<Vec<u16>> for Word {
    fn from(letters: Vec<u16>) -> Self {
        Word(letters)
    }
}

/// Errors raised while validating or parsing a presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PresentationError {
    /// The generator list is empty.
    NoGenerators,
    /// A generator name is empty or contains a reserved character (`#`, `=`)
    /// or whitespace.
    InvalidGeneratorName { name: String },
    DuplicateGenerator { name: String },
    /// A relation chain mentions a generator index that was never declared.
    UnknownLetter { chain: usize, letter: u16 },
    /// A word used a name that is not a declared generator.
    UnknownName { name: String },
    /// A relation chain has fewer than two sides.
    ChainTooShort { chain: usize },
    /// A relation chain contains an empty word.
    EmptySide { chain: usize },
    /// The sides of a relation chain do not all have the same length.
    NonHomogeneous { chain: usize, rendered: String },
    /// Malformed input text (1-based line number).
    Syntax { line: usize, message: String },
}

impl fmt::Display for PresentationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PresentationError::NoGenerators => write!(f, "presentation declares no generators"),
            PresentationError::InvalidGeneratorName { name } => {
                write!(f, "invalid generator name {name:?}")
            }
            PresentationError::DuplicateGenerator { name } => {
                write!(f, "duplicate generator name {name:?}")
            }
            PresentationError::UnknownLetter { chain, letter } => {
                write!(f, "relation chain {chain} uses undeclared letter index {letter}")
            }
            PresentationError::UnknownName { name } => {
                write!(f, "unknown generator name {name:?}")
            }
            PresentationError::ChainTooShort { chain } => {
                write!(f, "relation chain {chain} needs at least two sides")
            }
            PresentationError::EmptySide { chain } => {
                write!(f, "relation chain {chain} contains an empty word")
            }
            PresentationError::NonHomogeneous { chain, rendered } => {
                write!(
                    f,
                    "relation chain {chain} is not homogeneous (sides of unequal length): {rendered}"
                )
            }
            PresentationError::Syntax { line, message } => {
                write!(f, "line {line}: {message}")
            }
        }
    }
}

impl core::error::Error for PresentationError {}

/// Generators plus homogeneous relation chains.
///
/// All invariants are enforced at construction: at least one generator,
/// distinct well-formed names, every chain with at least two nonempty sides
/// of equal length over declared generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relations: Vec<Vec<Word>>,
}

impl Presentation {
    pub fn new(
        generators: Vec<String>,
        relations: Vec<Vec<Word>>,
    ) -> Result<Self, PresentationError> {
        if generators.is_empty() {
            return Err(PresentationError::NoGenerators);
        }
        for name in &generators {
            if name.is_empty() || name.contains(['#', '=']) || name.contains(char::is_whitespace) {
                return Err(PresentationError::InvalidGeneratorName { name: name.clone() });
            }
        }
        for (i, name) in generators.iter().enumerate() {
            if generators[..i].contains(name) {
                return Err(PresentationError::DuplicateGenerator { name: name.clone() });
            }
        }
        let pres = Presentation {
            generators,
            relations: Vec::new(),
        };
        let mut pres = pres;
        for (ci, chain) in relations.into_iter().enumerate() {
            pres.validate_chain(ci, &chain)?;
            pres.relations.push(chain);
        }
        Ok(pres)
    }

    fn validate_chain(&self, ci: usize, chain: &[Word]) -> Result<(), PresentationError> {
        if chain.len() < 2 {
            return Err(PresentationError::ChainTooShort { chain: ci });
        }
        for side in chain {
            if side.is_empty() {
                return Err(PresentationError::EmptySide { chain: ci });
            }
            for &letter in side.letters() {
                if letter as usize >= self.generators.len() {
                    return Err(PresentationError::UnknownLetter { chain: ci, letter });
                }
            }
        }
        let len = chain[0].len();
        if chain.iter().any(|side| side.len() != len) {
            return Err(PresentationError::NonHomogeneous {
                chain: ci,
                rendered: self.render_chain(chain),
            });
        }
        Ok(())
    }

    /// Parse the line-oriented text format:
    ///
    /// ```text
    /// # comment
    /// gens: s t
    /// rel: s t s = t s t
    /// ```
    ///
    /// Exactly one `gens:` line must come first; each `rel:` line holds one
    /// chain with sides separated by `=` and letters separated by whitespace.
    /// `#` starts a comment anywhere in a line.
    pub fn parse(text: &str) -> Result<Self, PresentationError> {
        let mut generators: Option<Vec<String>> = None;
        let mut raw_chains: Vec<(usize, Vec<Vec<String>>)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let lineno = lineno + 1;
            if let Some(rest) = line.strip_prefix("gens:") {
                if generators.is_some() {
                    return Err(PresentationError::Syntax {
                        line: lineno,
                        message: "duplicate gens: line".to_string(),
                    });
                }
                let names: Vec<String> =
                    rest.split_whitespace().map(|s| s.to_string()).collect();
                generators = Some(names);
            } else if let Some(rest) = line.strip_prefix("rel:") {
                if generators.is_none() {
                    return Err(PresentationError::Syntax {
                        line: lineno,
                        message: "rel: line before gens: line".to_string(),
                    });
                }
                let mut sides: Vec<Vec<String>> = Vec::new();
                for part in rest.split('=') {
                    let side: Vec<String> =
                        part.split_whitespace().map(|s| s.to_string()).collect();
                    sides.push(side);
                }
                raw_chains.push((lineno, sides));
            } else {
                return Err(PresentationError::Syntax {
                    line: lineno,
                    message: format!("expected gens: or rel:, got {line:?}"),
                });
            }
        }
        let generators = generators.ok_or(PresentationError::NoGenerators)?;
        let lookup = |name: &str| -> Result<u16, PresentationError> {
            generators
                .iter()
                .position(|g| g == name)
                .map(|i| i as u16)
                .ok_or_else(|| PresentationError::UnknownName {
                    name: name.to_string(),
                })
        };
        let mut relations = Vec::new();
        for (_line, sides) in raw_chains {
            let mut chain = Vec::new();
            for side in sides {
                let mut letters = Vec::new();
                for name in side {
                    letters.push(lookup(&name)?);
                }
                chain.push(Word(letters));
            }
            relations.push(chain);
        }
        Presentation::new(generators, relations)
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_name(&self, index: usize) -> &str {
        &self.generators[index]
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generators
    }

    pub fn generator_index(&self, name: &str) -> Option<u16> {
        self.generators.iter().position(|g| g == name).map(|i| i as u16)
    }

    pub fn relations(&self) -> &[Vec<Word>] {
        &self.relations
    }

    /// Parse a whitespace-separated word such as `"s t s"`. The empty string
    /// is the empty word.
    pub fn word_from_str(&self, text: &str) -> Result<Word, PresentationError> {
        let mut letters = Vec::new();
        for name in text.split_whitespace() {
            let idx = self
                .generator_index(name)
                .ok_or_else(|| PresentationError::UnknownName {
                    name: name.to_string(),
                })?;
            letters.push(idx);
        }
        Ok(Word(letters))
    }

    /// Render a word as whitespace-separated generator names.
    pub fn render_word(&self, word: &Word) -> String {
        let mut out = String::new();
        for (i, &letter) in word.letters().iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(&self.generators[letter as usize]);
        }
        out
    }

    fn render_chain(&self, chain: &[Word]) -> String {
        let mut out = String::new();
        for (i, side) in chain.iter().enumerate() {
            if i > 0 {
                out.push_str(" = ");
            }
            out.push_str(&self.render_word(side));
        }
        out
    }
}

impl fmt::Display for Presentation {
    /// Re-emits the text format accepted by [`Presentation::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gens:")?;
        for g in &self.generators {
            write!(f, " {g}")?;
        }
        for chain in &self.relations {
            write!(f, "\nrel: {}", self.render_chain(chain))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parse_roundtrip() {
        let text = "# braid on three strands\ngens: s t\nrel: s t s = t s t\n";
        let p = Presentation::parse(text).unwrap();
        assert_eq!(p.generator_count(), 2);
        assert_eq!(p.relations().len(), 1);
        let again = Presentation::parse(&p.to_string()).unwrap();
        assert_eq!(p, again);
    }

    #[test]
    fn parse_multi_sided_chain() {
        let p = Presentation::parse("gens: a b c\nrel: a b c = b c a = c a b\n").unwrap();
        assert_eq!(p.relations()[0].len(), 3);
    }

    #[test]
    fn trailing_comments_and_blank_lines() {
        let p = Presentation::parse("\ngens: a b  # two letters\n\nrel: a a = b b # square\n")
            .unwrap();
        assert_eq!(p.generator_count(), 2);
    }

    #[test]
    fn rejects_non_homogeneous_chain_with_rendering() {
        let err = Presentation::parse("gens: a b\nrel: a b = b\n").unwrap_err();
        match err {
            PresentationError::NonHomogeneous { rendered, .. } => {
                assert_eq!(rendered, "a b = b");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(
            Presentation::parse("gens:\n"),
            Err(PresentationError::NoGenerators)
        ));
        assert!(matches!(
            Presentation::parse("gens: a a\n"),
            Err(PresentationError::DuplicateGenerator { .. })
        ));
        assert!(matches!(
            Presentation::parse("gens: a\nrel: a x = a a\n"),
            Err(PresentationError::UnknownName { .. })
        ));
        assert!(matches!(
            Presentation::parse("rel: a = b\ngens: a b\n"),
            Err(PresentationError::Syntax { .. })
        ));
        assert!(matches!(
            Presentation::new(names(&["a"]), vec![vec![Word(vec![0])]]),
            Err(PresentationError::ChainTooShort { .. })
        ));
        assert!(matches!(
            Presentation::new(names(&["a"]), vec![vec![Word(vec![0]), Word(vec![])]]),
            Err(PresentationError::EmptySide { .. })
        ));
        assert!(matches!(
            Presentation::new(names(&["a"]), vec![vec![Word(vec![0]), Word(vec![1])]]),
            Err(PresentationError::UnknownLetter { .. })
        ));
    }

    #[test]
    fn word_parsing_and_rendering() {
        let p = Presentation::parse("gens: s t\nrel: s t s = t s t\n").unwrap();
        let w = p.word_from_str("s t s").unwrap();
        assert_eq!(w, Word(vec![0, 1, 0]));
        assert_eq!(p.render_word(&w), "s t s");
        assert_eq!(p.word_from_str("").unwrap(), Word(vec![]));
    }
}

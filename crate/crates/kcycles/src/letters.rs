//! Letter alphabets for cycle-notation text.
//!
//! Letters are positive integers. `Base36` renders them as the single
//! characters `1..9, A..Z` (so letter 10 is `A`, letter 35 is `Z`) and
//! parses one letter per character. `Decimal` renders full decimal
//! numbers and parses whitespace- or comma-separated tokens, which
//! permits letters above 35.

use crate::error::{Error, Result};
use crate::perm::Letter;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LetterAlphabet {
    /// One character per letter: `1..9` then `A..Z`. Caps letters at 35.
    #[default]
    Base36,
    /// Decimal integers separated by whitespace or commas. Unbounded.
    Decimal,
}

impl LetterAlphabet {
    /// Render a single letter.
    pub fn render(&self, letter: Letter) -> Result<String> {
        match self {
            LetterAlphabet::Base36 => match letter {
                1..=9 => Ok(((b'0' + letter as u8) as char).to_string()),
                10..=35 => Ok(((b'A' + (letter - 10) as u8) as char).to_string()),
                _ => Err(Error::Render(format!(
                    "letter {letter} is outside the base-36 range 1..=35"
                ))),
            },
            LetterAlphabet::Decimal => {
                if letter == 0 {
                    Err(Error::Render("letters start at 1".into()))
                } else {
                    Ok(letter.to_string())
                }
            }
        }
    }

    /// Parse a single base-36 character.
    pub fn letter_from_char(c: char) -> Result<Letter> {
        match c {
            '1'..='9' => Ok(c as Letter - '0' as Letter),
            'A'..='Z' => Ok(c as Letter - 'A' as Letter + 10),
            _ => Err(Error::MalformedInput(format!("invalid letter '{c}'"))),
        }
    }

    /// Join the letters of one cycle into its textual body.
    pub fn render_cycle(&self, letters: &[Letter]) -> Result<String> {
        let parts: Result<Vec<String>> = letters.iter().map(|&l| self.render(l)).collect();
        let sep = match self {
            LetterAlphabet::Base36 => "",
            LetterAlphabet::Decimal => " ",
        };
        Ok(parts?.join(sep))
    }

    /// Split the textual body of one cycle into letters.
    pub fn parse_cycle_body(&self, body: &str) -> Result<Vec<Letter>> {
        match self {
            LetterAlphabet::Base36 => body
                .chars()
                .filter(|c| !c.is_whitespace() && *c != ',')
                .map(Self::letter_from_char)
                .collect(),
            LetterAlphabet::Decimal => body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    let v: Letter = t
                        .parse()
                        .map_err(|_| Error::MalformedInput(format!("invalid letter '{t}'")))?;
                    if v == 0 {
                        return Err(Error::MalformedInput("letters start at 1".into()));
                    }
                    Ok(v)
                })
                .collect(),
        }
    }
}

/// Parse a one-line word: either whitespace/comma-separated decimal
/// integers ("2 1 4 3") or a contiguous base-36 word ("2143").
pub fn parse_one_line(text: &str) -> Result<Vec<Letter>> {
    let tokens: Vec<&str> = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .collect();
    if tokens.is_empty() {
        return Err(Error::MalformedInput("empty one-line word".into()));
    }
    if tokens.len() > 1 {
        return tokens
            .iter()
            .map(|t| {
                t.parse::<Letter>()
                    .map_err(|_| Error::MalformedInput(format!("invalid letter '{t}'")))
            })
            .collect();
    }
    LetterAlphabet::Base36.parse_cycle_body(tokens[0])
}

//! Bracketed text format.
//!
//! A column is written `[1 2 -2]`, the empty column `ε` is `[]`, and a word of
//! columns is a sequence of columns, optionally separated by whitespace. A
//! plain word is a whitespace separated list of letters such as `1 2 -2`.
//! Letters are signed decimals with `-i` standing for `ī`.

use crate::words::{Column, DecoratedWord, Letter, PlainWord, Rank};
use crate::{Error, Result};

fn parse_error(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b) if b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn letter(&mut self, rank: Rank) -> Result<Letter> {
        let start = self.pos;
        let negative = self.peek() == Some(b'-');
        if negative {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(parse_error(self.pos, "expected a digit"));
        }
        let digits = std::str::from_utf8(&self.src[digits_start..self.pos]).unwrap();
        let value: usize = digits.parse().map_err(|_| parse_error(start, "letter out of range"))?;
        if value == 0 || value > rank.get() {
            return Err(parse_error(
                start,
                format!("letter must satisfy 1 ≤ |value| ≤ {}", rank.get()),
            ));
        }
        let index = value as u16;
        Ok(if negative {
            Letter::barred(index)
        } else {
            Letter::unbarred(index)
        })
    }

    fn column(&mut self, rank: Rank) -> Result<Column> {
        let start = self.pos;
        if self.peek() != Some(b'[') {
            return Err(parse_error(self.pos, "expected '['"));
        }
        self.pos += 1;
        let mut letters = Vec::new();
        if self.peek() != Some(b']') {
            loop {
                letters.push(self.letter(rank)?);
                match self.peek() {
                    Some(b' ') => self.pos += 1,
                    Some(b']') => break,
                    Some(_) => return Err(parse_error(self.pos, "expected ' ' or ']'")),
                    None => return Err(parse_error(self.pos, "unterminated column")),
                }
            }
        }
        self.pos += 1;
        Column::new(letters).map_err(|_| parse_error(start, "letters must be strictly increasing"))
    }
}

/// Parses a single column, e.g. `[1 -2]` or `[]`. Only strict increase and
/// letter range are checked; admissibility is left to the caller.
pub fn parse_column(src: &str, rank: Rank) -> Result<Column> {
    let mut cur = Cursor::new(src);
    cur.skip_ws();
    let col = cur.column(rank)?;
    cur.skip_ws();
    if !cur.at_end() {
        return Err(parse_error(cur.pos, "trailing input after column"));
    }
    Ok(col)
}

/// Parses a nonempty word of admissible columns.
pub fn parse_decorated(src: &str, rank: Rank) -> Result<DecoratedWord> {
    let mut cur = Cursor::new(src);
    let mut columns = Vec::new();
    let mut starts = Vec::new();
    cur.skip_ws();
    while !cur.at_end() {
        starts.push(cur.pos);
        columns.push(cur.column(rank)?);
        cur.skip_ws();
    }
    if columns.is_empty() {
        return Err(parse_error(cur.pos, "expected at least one column"));
    }
    if let Some(i) = columns.iter().position(|c| !c.is_admissible(rank)) {
        return Err(parse_error(
            starts[i],
            format!("column is not admissible at rank {rank}"),
        ));
    }
    Ok(DecoratedWord::from_columns(columns))
}

/// Parses a whitespace separated list of letters. The empty string is the
/// empty word.
pub fn parse_plain(src: &str, rank: Rank) -> Result<PlainWord> {
    let mut cur = Cursor::new(src);
    let mut letters = Vec::new();
    cur.skip_ws();
    while !cur.at_end() {
        letters.push(cur.letter(rank)?);
        match cur.peek() {
            None => {}
            Some(b) if b.is_ascii_whitespace() => cur.skip_ws(),
            Some(_) => return Err(parse_error(cur.pos, "expected whitespace between letters")),
        }
    }
    Ok(PlainWord(letters))
}

pub fn format_column(col: &Column) -> String {
    let inner: Vec<String> = col.letters().iter().map(|x| x.to_string()).collect();
    format!("[{}]", inner.join(" "))
}

/// Columns separated by single spaces: `[] [2] [1 2 3]`.
pub fn format_columns(cols: &[Column]) -> String {
    cols.iter().map(format_column).collect::<Vec<_>>().join(" ")
}

pub fn format_decorated(w: &DecoratedWord) -> String {
    format_columns(w.columns())
}

pub fn format_plain(w: &PlainWord) -> String {
    w.letters().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

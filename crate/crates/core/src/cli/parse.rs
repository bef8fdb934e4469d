//! Text formats read and written by the command-line tool.
//!
//! Map file:
//!
//! ```text
//! ring: Z/6
//! vars: 2
//! X1 -> 3 * X1
//! X2 -> X1^2 X2
//! ```
//!
//! Matrix file: a `matrix: n` header followed by `n` rows of `n`
//! non-negative integers. In both formats blank lines and lines starting
//! with `#` are ignored.

use std::fmt;

use crate::domain::{Domain, DomainElement};
use crate::matrix::ExponentMatrix;
use crate::monomial::{Image, Monomial, MonomialMap};

/// A syntax or content error at a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

type ParseResult<T> = Result<T, ParseError>;

fn error_at(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Map(MonomialMap),
    Matrix(ExponentMatrix),
}

/// Meaningful lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let t = line.trim();
        (!t.is_empty() && !t.starts_with('#')).then_some((i + 1, line))
    })
}

fn last_line(text: &str) -> usize {
    text.lines().count().max(1)
}

fn column_of(line: &str, byte: usize) -> usize {
    line[..byte].chars().count() + 1
}

/// Splits `key: value`, tolerating whitespace around both parts. Returns the
/// value and its byte offset in `line`.
fn header<'a>(line_no: usize, line: &'a str, key: &str) -> ParseResult<(&'a str, usize)> {
    let start = line.len() - line.trim_start().len();
    let rest = &line[start..];
    let bad = || error_at(line_no, start + 1, format!("expected `{key}: ...`"));
    let after_key = rest.strip_prefix(key).ok_or_else(bad)?;
    let colon = after_key.trim_start();
    let value = colon.strip_prefix(':').ok_or_else(bad)?;
    let offset = line.len() - value.len();
    let trimmed = value.trim_start();
    let offset = offset + (value.len() - trimmed.len());
    Ok((trimmed.trim_end(), offset))
}

/// Decides between the two formats from the first meaningful line.
pub fn parse_input(text: &str) -> ParseResult<Input> {
    match content_lines(text).next() {
        Some((_, line)) if line.trim_start().starts_with("matrix") => {
            parse_matrix(text).map(Input::Matrix)
        }
        Some((_, line)) if line.trim_start().starts_with("ring") => parse_map(text).map(Input::Map),
        Some((no, line)) => Err(error_at(
            no,
            column_of(line, line.len() - line.trim_start().len()),
            "expected a `ring:` or `matrix:` header",
        )),
        None => Err(error_at(last_line(text), 1, "empty input")),
    }
}

fn parse_size(line_no: usize, line: &str, key: &str) -> ParseResult<usize> {
    let (value, offset) = header(line_no, line, key)?;
    match value.parse::<usize>() {
        Ok(n) if n >= 1 => Ok(n),
        _ => Err(error_at(
            line_no,
            column_of(line, offset),
            format!("`{key}` must be a positive integer, got `{value}`"),
        )),
    }
}

pub fn parse_matrix(text: &str) -> ParseResult<ExponentMatrix> {
    let mut lines = content_lines(text);
    let (no, line) = lines
        .next()
        .ok_or_else(|| error_at(last_line(text), 1, "empty input"))?;
    let n = parse_size(no, line, "matrix")?;
    let mut entries = Vec::with_capacity(n * n);
    let mut rows = 0;
    for (no, line) in lines {
        if rows == n {
            return Err(error_at(no, 1, format!("more than {n} rows")));
        }
        let mut count = 0;
        for (offset, token) in tokens(line) {
            let value = token.parse::<u64>().map_err(|_| {
                error_at(
                    no,
                    column_of(line, offset),
                    format!("expected a non-negative integer, got `{token}`"),
                )
            })?;
            entries.push(value);
            count += 1;
        }
        if count != n {
            return Err(error_at(
                no,
                1,
                format!("row has {count} entries, expected {n}"),
            ));
        }
        rows += 1;
    }
    if rows != n {
        return Err(error_at(
            last_line(text),
            1,
            format!("found {rows} rows, expected {n}"),
        ));
    }
    Ok(ExponentMatrix::new(n, entries).expect("n*n entries"))
}

/// Whitespace-separated tokens with byte offsets.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.split_whitespace()
        .map(move |t| (t.as_ptr() as usize - line.as_ptr() as usize, t))
}

pub fn render_matrix(m: &ExponentMatrix) -> String {
    format!("matrix: {}\n{m}", m.n())
}

pub fn parse_map(text: &str) -> ParseResult<MonomialMap> {
    let mut lines = content_lines(text);
    let end = last_line(text);
    let (no, line) = lines
        .next()
        .ok_or_else(|| error_at(end, 1, "empty input"))?;
    let (ring, offset) = header(no, line, "ring")?;
    let domain: Domain = ring.parse().map_err(|_| {
        error_at(
            no,
            column_of(line, offset),
            format!("unknown ring `{ring}`, expected Z, Q or Z/<m> with m >= 2"),
        )
    })?;
    let (no, line) = lines
        .next()
        .ok_or_else(|| error_at(end, 1, "missing `vars:` line"))?;
    let n = parse_size(no, line, "vars")?;

    let mut images: Vec<Option<Image>> = vec![None; n];
    for (no, line) in lines {
        let (index, image) = parse_assignment(no, line, domain, n)?;
        if images[index].is_some() {
            return Err(error_at(no, 1, format!("X{} is assigned twice", index + 1)));
        }
        images[index] = Some(image);
    }
    let images = images
        .into_iter()
        .enumerate()
        .map(|(i, image)| {
            image.ok_or_else(|| error_at(end, 1, format!("X{} is not assigned", i + 1)))
        })
        .collect::<ParseResult<Vec<Image>>>()?;
    Ok(MonomialMap::new(domain, images).expect("n >= 1 images"))
}

pub fn render_map(map: &MonomialMap) -> String {
    let mut out = format!("ring: {}\nvars: {}\n", map.domain(), map.n());
    for (i, image) in map.images().iter().enumerate() {
        out.push_str(&format!("X{} -> {image}\n", i + 1));
    }
    out
}

/// A cursor over one line that reports 1-based columns.
struct Scanner<'a> {
    line_no: usize,
    line: &'a str,
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn skip_space(&mut self) {
        let rest = &self.line[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&self) -> Option<char> {
        self.line[self.pos..].chars().next()
    }

    fn at_end(&mut self) -> bool {
        self.skip_space();
        self.pos == self.line.len()
    }

    fn eat(&mut self, s: &str) -> bool {
        self.skip_space();
        if self.line[self.pos..].starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn error(&self, at: usize, message: impl Into<String>) -> ParseError {
        error_at(self.line_no, column_of(self.line, at), message)
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let rest = &self.line[self.pos..];
        let len = rest.find(|c: char| !f(c)).unwrap_or(rest.len());
        self.pos += len;
        &rest[..len]
    }

    fn index(&mut self, n: usize) -> ParseResult<usize> {
        self.skip_space();
        let start = self.pos;
        if !self.eat("X") {
            return Err(self.error(start, "expected a variable `X<i>`"));
        }
        let digits = self.take_while(|c| c.is_ascii_digit());
        match digits.parse::<usize>() {
            Ok(i) if (1..=n).contains(&i) => Ok(i - 1),
            _ => Err(self.error(start, format!("variable index must be in 1..={n}"))),
        }
    }
}

fn parse_assignment(
    line_no: usize,
    line: &str,
    domain: Domain,
    n: usize,
) -> ParseResult<(usize, Image)> {
    let mut s = Scanner {
        line_no,
        line,
        pos: 0,
    };
    let index = s.index(n)?;
    if !s.eat("->") {
        let at = s.pos;
        return Err(s.error(at, "expected `->`"));
    }
    let image = parse_image(&mut s, domain, n)?;
    Ok((index, image))
}

fn parse_image(s: &mut Scanner<'_>, domain: Domain, n: usize) -> ParseResult<Image> {
    s.skip_space();
    let coeff_start = s.pos;
    let coeff = match s.peek() {
        Some(c) if c.is_ascii_digit() || c == '-' || c == '+' => {
            let text = s.take_while(|c| c.is_ascii_digit() || matches!(c, '-' | '+' | '/'));
            Some(parse_coefficient(s, coeff_start, text, domain)?)
        }
        Some(_) => None,
        None => return Err(s.error(coeff_start, "missing image")),
    };
    let starred = s.eat("*");

    let mut exponents = vec![0u64; n];
    let mut factors = 0;
    while !s.at_end() {
        let j = s.index(n)?;
        let e = if s.eat("^") {
            s.skip_space();
            let at = s.pos;
            if s.peek() == Some('-') {
                return Err(s.error(at, "negative exponent"));
            }
            let digits = s.take_while(|c| c.is_ascii_digit());
            digits
                .parse::<u64>()
                .map_err(|_| s.error(at, "expected a non-negative integer exponent"))?
        } else {
            1
        };
        exponents[j] = exponents[j]
            .checked_add(e)
            .ok_or_else(|| s.error(s.pos, "exponent too large"))?;
        factors += 1;
    }
    if starred && factors == 0 {
        let at = s.pos;
        return Err(s.error(at, "expected a variable after `*`"));
    }
    match coeff {
        Some(c) if c.is_zero() && factors == 0 => Ok(Image::Zero),
        Some(c) if c.is_zero() => {
            Err(s.error(coeff_start, format!("coefficient is zero in {domain}")))
        }
        Some(c) => Ok(Monomial::new(c, exponents).expect("nonzero").into()),
        None => Ok(Monomial::monic(domain, exponents).into()),
    }
}

fn parse_coefficient(
    s: &Scanner<'_>,
    at: usize,
    text: &str,
    domain: Domain,
) -> ParseResult<DomainElement> {
    domain.parse_element(text).map_err(|_| {
        s.error(
            at,
            format!("coefficient `{text}` is not an element of {domain}"),
        )
    })
}

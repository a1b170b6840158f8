//! Shared helpers for the line-oriented text formats.

use crate::error::{Error, Result};

/// Non-empty lines with `#` comments removed, paired with 1-based line numbers.
pub(crate) fn content_lines(input: &str) -> impl Iterator<Item = (usize, &str)> {
    input.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

pub(crate) fn parse_index(word: &str, line: usize) -> Result<usize> {
    word.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("expected a non-negative integer, found `{word}`"),
    })
}

pub(crate) fn parse_indices(words: &str, line: usize) -> Result<Vec<usize>> {
    words
        .split_whitespace()
        .map(|w| parse_index(w, line))
        .collect()
}

pub(crate) fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Splits `m: rest` into the element index and the remainder.
pub(crate) fn split_labelled(line: &str, line_no: usize) -> Result<(usize, &str)> {
    let (label, rest) = line.split_once(':').ok_or_else(|| Error::Parse {
        line: line_no,
        msg: "expected `<element>: ...`".into(),
    })?;
    Ok((parse_index(label.trim(), line_no)?, rest.trim()))
}

/// Renders `m: body`, or `m:` when the body is empty.
pub(crate) fn labelled_line(m: usize, body: &str) -> String {
    if body.is_empty() {
        format!("{m}:\n")
    } else {
        format!("{m}: {body}\n")
    }
}

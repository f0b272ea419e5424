//! Plain-text file format for abstract systems.
//!
//! ```text
//! # comment lines start with '#'
//! size 3
//! mul
//! 0 0 0
//! 1 1 1
//! 0 1 2
//! meet
//! 0 0 0
//! 0 1 0
//! 0 0 2
//! delta
//! 111
//! 111
//! 011
//! chi          # optional block
//! 111
//! 011
//! 011
//! end
//! ```
//!
//! Multiplication and meet rows are whitespace-separated element indices.
//! Relation rows are bit rows, either one contiguous string (`011`) or
//! whitespace-separated bits (`0 1 1`); bit `y` of row `x` states whether
//! `(x, y)` is in the relation.  Serialization always writes contiguous bit
//! rows.  Parse errors name the offending line.

use crate::{Error, Result};

use super::{AbstractSystem, Relation};

struct Lines<'a> {
    lines: std::iter::Enumerate<std::str::Lines<'a>>,
    last_line: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Lines<'a> {
        Lines {
            lines: text.lines().enumerate(),
            last_line: 0,
        }
    }

    /// The next meaningful line (skipping blanks and comments) with its
    /// 1-based number.
    fn next(&mut self) -> Option<(usize, &'a str)> {
        for (idx, raw) in self.lines.by_ref() {
            self.last_line = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            return Some((idx + 1, line));
        }
        None
    }

    fn expect(&mut self, what: &str) -> Result<(usize, &'a str)> {
        self.next().ok_or_else(|| {
            Error::parse(
                self.last_line + 1,
                format!("expected {what}, found end of input"),
            )
        })
    }
}

fn parse_index_row(line: &str, number: usize, size: usize) -> Result<Vec<usize>> {
    let entries: Vec<&str> = line.split_whitespace().collect();
    if entries.len() != size {
        return Err(Error::parse(
            number,
            format!("expected {size} entries, found {}", entries.len()),
        ));
    }
    entries
        .iter()
        .map(|entry| {
            let value: usize = entry
                .parse()
                .map_err(|_| Error::parse(number, format!("bad element index {entry:?}")))?;
            if value >= size {
                return Err(Error::parse(
                    number,
                    format!("element index {value} out of range for size {size}"),
                ));
            }
            Ok(value)
        })
        .collect()
}

fn parse_bit_row(line: &str, number: usize, size: usize) -> Result<u64> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    let bits: Vec<char> = if tokens.len() == 1 && tokens[0].len() == size {
        tokens[0].chars().collect()
    } else if tokens.len() == size && tokens.iter().all(|t| t.len() == 1) {
        tokens.iter().map(|t| t.chars().next().unwrap()).collect()
    } else {
        return Err(Error::parse(
            number,
            format!("expected {size} bits, found {line:?}"),
        ));
    };
    let mut row = 0u64;
    for (y, bit) in bits.iter().enumerate() {
        match bit {
            '0' => {}
            '1' => row |= 1 << y,
            other => {
                return Err(Error::parse(number, format!("bad bit {other:?}")));
            }
        }
    }
    Ok(row)
}

fn parse_block_header(lines: &mut Lines<'_>, expected: &str) -> Result<()> {
    let (number, line) = lines.expect(&format!("block `{expected}`"))?;
    if line != expected {
        return Err(Error::parse(
            number,
            format!("expected block `{expected}`, found {line:?}"),
        ));
    }
    Ok(())
}

fn parse_table(lines: &mut Lines<'_>, size: usize) -> Result<Vec<Vec<usize>>> {
    (0..size)
        .map(|_| {
            let (number, line) = lines.expect("table row")?;
            parse_index_row(line, number, size)
        })
        .collect()
}

fn parse_relation(lines: &mut Lines<'_>, size: usize) -> Result<Relation> {
    let rows = (0..size)
        .map(|_| {
            let (number, line) = lines.expect("relation row")?;
            parse_bit_row(line, number, size)
        })
        .collect::<Result<Vec<u64>>>()?;
    Relation::from_rows(size, rows)
}

/// Parses an abstract system from its textual form.
pub fn parse(text: &str) -> Result<AbstractSystem> {
    let mut lines = Lines::new(text);

    let (number, header) = lines.expect("`size <m>` header")?;
    let size = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["size", m] => m
            .parse::<usize>()
            .map_err(|_| Error::parse(number, format!("bad size {m:?}")))?,
        _ => {
            return Err(Error::parse(
                number,
                format!("expected `size <m>`, found {header:?}"),
            ))
        }
    };
    if size == 0 {
        return Err(Error::parse(number, "size must be positive"));
    }
    if size > super::MAX_SYSTEM_SIZE {
        return Err(Error::parse(
            number,
            format!(
                "size {size} exceeds the supported maximum {}",
                super::MAX_SYSTEM_SIZE
            ),
        ));
    }

    parse_block_header(&mut lines, "mul")?;
    let mul_rows = parse_table(&mut lines, size)?;
    parse_block_header(&mut lines, "meet")?;
    let meet_rows = parse_table(&mut lines, size)?;
    parse_block_header(&mut lines, "delta")?;
    let delta = parse_relation(&mut lines, size)?;

    let (number, line) = lines.expect("`chi` block or `end`")?;
    let chi = match line {
        "chi" => {
            let chi = parse_relation(&mut lines, size)?;
            let (number, line) = lines.expect("`end`")?;
            if line != "end" {
                return Err(Error::parse(
                    number,
                    format!("expected `end`, found {line:?}"),
                ));
            }
            Some(chi)
        }
        "end" => None,
        other => {
            return Err(Error::parse(
                number,
                format!("expected `chi` or `end`, found {other:?}"),
            ))
        }
    };

    if let Some((number, line)) = lines.next() {
        return Err(Error::parse(
            number,
            format!("unexpected content after `end`: {line:?}"),
        ));
    }

    AbstractSystem::new(size, mul_rows, meet_rows, delta, chi)
}

fn write_relation(out: &mut String, rel: &Relation) {
    for x in 0..rel.size() {
        for y in 0..rel.size() {
            out.push(if rel.contains(x, y) { '1' } else { '0' });
        }
        out.push('\n');
    }
}

/// Renders a system in the format accepted by [`parse`].
pub fn serialize(sys: &AbstractSystem) -> String {
    let mut out = String::new();
    out.push_str(&format!("size {}\n", sys.size()));
    for (header, rows) in [("mul", sys.mul_rows()), ("meet", sys.meet_rows())] {
        out.push_str(header);
        out.push('\n');
        for row in rows {
            let line: Vec<String> = row.iter().map(usize::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
    }
    out.push_str("delta\n");
    write_relation(&mut out, sys.delta_rel());
    if let Some(chi) = sys.chi_rel() {
        out.push_str("chi\n");
        write_relation(&mut out, chi);
    }
    out.push_str("end\n");
    out
}

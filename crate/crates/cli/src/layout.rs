//! Table layout: one `key value` pair per line, optionally re-flowed to a
//! fixed width with indented continuation lines.

use std::str::FromStr;

pub const WRAP_WIDTH: usize = 90;
pub const CONTINUATION_INDENT: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Layout {
    #[default]
    Plain,
    Wrapped,
}

impl FromStr for Layout {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "plain" => Ok(Layout::Plain),
            "wrapped" => Ok(Layout::Wrapped),
            _ => Err(format!("unknown format {s:?}; expected plain or wrapped")),
        }
    }
}

/// Splits `line` into a first line of at most [`WRAP_WIDTH`] characters
/// followed by continuation lines, each indented by
/// [`CONTINUATION_INDENT`] spaces.
pub fn wrap_line(line: &str) -> Vec<String> {
    let chars: Vec<char> = line.chars().collect();
    if chars.len() <= WRAP_WIDTH {
        return vec![line.to_string()];
    }
    let indent = " ".repeat(CONTINUATION_INDENT);
    let mut out = vec![chars[..WRAP_WIDTH].iter().collect::<String>()];
    for chunk in chars[WRAP_WIDTH..].chunks(WRAP_WIDTH - CONTINUATION_INDENT) {
        out.push(format!("{indent}{}", chunk.iter().collect::<String>()));
    }
    out
}

/// Inverse of [`wrap_line`] over a whole document. Lines beginning with
/// exactly the continuation indent are appended to the line before them.
pub fn unwrap_text(text: &str) -> String {
    let indent = " ".repeat(CONTINUATION_INDENT);
    let mut out: Vec<String> = Vec::new();
    for line in text.lines() {
        let is_continuation = line.starts_with(&indent)
            && !line[CONTINUATION_INDENT..].starts_with(' ')
            && !out.is_empty();
        match (is_continuation, out.last_mut()) {
            (true, Some(prev)) => prev.push_str(&line[CONTINUATION_INDENT..]),
            _ => out.push(line.to_string()),
        }
    }
    let mut joined = out.join("\n");
    if text.ends_with('\n') {
        joined.push('\n');
    }
    joined
}

pub fn render_rows<K: std::fmt::Display>(rows: &[(K, String)], layout: Layout) -> String {
    let mut out = String::new();
    for (key, value) in rows {
        let line = format!("{key} {value}");
        let lines = match layout {
            Layout::Plain => vec![line],
            Layout::Wrapped => wrap_line(&line),
        };
        for l in lines {
            out.push_str(&l);
            out.push('\n');
        }
    }
    out
}

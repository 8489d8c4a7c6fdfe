//! `.facets` text format: one facet per line, labels separated by single
//! spaces, `#` starts a comment line.

use std::fs;
use std::path::Path;

use super::Complex;
use crate::error::{Error, Result};

/// Facets in lexicographic label order, labels sorted within each facet.
pub fn write_facets(k: &Complex) -> String {
    let mut out = String::new();
    for f in k.labeled_facets() {
        out.push_str(&f.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_facets(text: &str) -> Result<Complex> {
    let mut facets: Vec<Vec<&str>> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim_end_matches('\r');
        if line.starts_with('#') || line.trim().is_empty() {
            continue;
        }
        let labels: Vec<&str> = line.split(' ').collect();
        if labels.iter().any(|l| l.is_empty() || l.contains('\t')) {
            return Err(Error::Parse {
                line: i + 1,
                msg: "labels must be separated by single spaces".into(),
            });
        }
        facets.push(labels);
    }
    if facets.is_empty() {
        return Err(Error::Parse {
            line: 0,
            msg: "no facets".into(),
        });
    }
    Complex::from_facets(&facets)
}

pub fn read_facets_file(path: &Path) -> Result<Complex> {
    parse_facets(&fs::read_to_string(path)?)
}

pub fn write_facets_file(k: &Complex, path: &Path) -> Result<()> {
    fs::write(path, write_facets(k))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn writer_is_canonical() {
        let k = parse_facets("# square\nd c\nb c\na b\nd a\n").unwrap();
        assert_eq!(write_facets(&k), "a b\na d\nb c\nc d\n");
        assert_eq!(parse_facets(&write_facets(&k)).unwrap(), k);
    }

    #[test]
    fn malformed_line_reports_number() {
        let err = parse_facets("a b\n# ok\na  c\n").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 3),
            e => panic!("unexpected {e}"),
        }
        assert!(parse_facets("# nothing\n").is_err());
    }
}

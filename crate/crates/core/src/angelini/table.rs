use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::AngeliniError;

const ENGLISH: &str = include_str!("../../data/tables/english.txt");

/// Letter ranks plus spellings of the integers a sequence may produce.
///
/// Text form, one record per line (`#` starts a comment line):
///
/// ```text
/// rank o 15
/// name 1 one
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LanguageTable {
    rank: BTreeMap<char, u32>,
    names: BTreeMap<u32, String>,
}

/// Lowercase and drop spaces and hyphens: "Twenty-six" becomes "twentysix".
pub fn normalize_name(raw: &str) -> String {
    raw.chars()
        .filter(|c| !c.is_whitespace() && *c != '-')
        .flat_map(char::to_lowercase)
        .collect()
}

impl LanguageTable {
    /// Roman alphabet ranks `a = 1 .. z = 26` and English names for 1..=26.
    pub fn english() -> Self {
        Self::parse(ENGLISH).expect("bundled English table is valid")
    }

    pub fn from_parts(
        rank: impl IntoIterator<Item = (char, u32)>,
        names: impl IntoIterator<Item = (u32, String)>,
    ) -> Result<Self, AngeliniError> {
        let mut table = LanguageTable { rank: BTreeMap::new(), names: BTreeMap::new() };
        for (c, r) in rank {
            table.insert_rank(c, r)?;
        }
        for (v, name) in names {
            table.names.insert(v, normalize_name(&name));
        }
        table.validate()?;
        Ok(table)
    }

    pub fn parse(text: &str) -> Result<Self, AngeliniError> {
        let mut table = LanguageTable { rank: BTreeMap::new(), names: BTreeMap::new() };
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |reason: &str| AngeliniError::Parse { line: idx + 1, reason: reason.to_string() };
            let mut fields = line.split_whitespace();
            match fields.next() {
                Some("rank") => {
                    let letter = fields.next().ok_or_else(|| bad("missing letter"))?;
                    let mut chars = letter.chars().flat_map(char::to_lowercase);
                    let c = chars.next().ok_or_else(|| bad("missing letter"))?;
                    if chars.next().is_some() {
                        return Err(bad("rank letter must be a single character"));
                    }
                    let r = fields
                        .next()
                        .and_then(|v| v.parse::<u32>().ok())
                        .filter(|&r| r >= 1)
                        .ok_or_else(|| bad("rank must be a positive integer"))?;
                    if fields.next().is_some() {
                        return Err(bad("trailing fields"));
                    }
                    table.insert_rank(c, r)?;
                }
                Some("name") => {
                    let v = fields
                        .next()
                        .and_then(|v| v.parse::<u32>().ok())
                        .ok_or_else(|| bad("name value must be a non-negative integer"))?;
                    let spelled = normalize_name(&fields.collect::<Vec<_>>().join(""));
                    if spelled.is_empty() {
                        return Err(bad("empty name"));
                    }
                    if table.names.insert(v, spelled).is_some() {
                        return Err(bad("duplicate name"));
                    }
                }
                _ => return Err(bad("expected `rank` or `name`")),
            }
        }
        table.validate()?;
        Ok(table)
    }

    fn insert_rank(&mut self, c: char, r: u32) -> Result<(), AngeliniError> {
        if self.rank.values().any(|&x| x == r) || self.rank.insert(c, r).is_some() {
            return Err(AngeliniError::DuplicateRank(c));
        }
        Ok(())
    }

    fn validate(&self) -> Result<(), AngeliniError> {
        for (&v, name) in &self.names {
            if name.is_empty() {
                return Err(AngeliniError::EmptyName(v));
            }
            if let Some(c) = name.chars().find(|c| !self.rank.contains_key(c)) {
                return Err(AngeliniError::UnrankedLetter { letter: c, value: v });
            }
        }
        Ok(())
    }

    pub fn rank(&self, letter: char) -> Option<u32> {
        self.rank.get(&letter).copied()
    }

    pub fn name(&self, value: u32) -> Option<&str> {
        self.names.get(&value).map(String::as_str)
    }

    pub fn names(&self) -> impl Iterator<Item = (u32, &str)> {
        self.names.iter().map(|(&v, s)| (v, s.as_str()))
    }

    /// Ranks of the letters spelling `value`.
    pub fn spell(&self, value: u32) -> Option<impl Iterator<Item = u32> + '_> {
        let name = self.names.get(&value)?;
        Some(name.chars().map(|c| self.rank[&c]))
    }

    /// Same alphabet, names kept only for values where `keep` holds.
    pub fn restricted(&self, keep: impl Fn(u32) -> bool) -> Self {
        LanguageTable {
            rank: self.rank.clone(),
            names: self.names.iter().filter(|(&v, _)| keep(v)).map(|(&v, s)| (v, s.clone())).collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (c, r) in &self.rank {
            writeln!(out, "rank {c} {r}").unwrap();
        }
        for (v, s) in &self.names {
            writeln!(out, "name {v} {s}").unwrap();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn english_table() {
        let t = LanguageTable::english();
        assert_eq!(t.rank('a'), Some(1));
        assert_eq!(t.rank('o'), Some(15));
        assert_eq!(t.rank('z'), Some(26));
        assert_eq!(t.name(1), Some("one"));
        assert_eq!(t.name(26), Some("twentysix"));
        assert_eq!(t.name(27), None);
        assert_eq!(t.name(0), Some("zero"));
        assert_eq!(t.names().count(), 27);
        assert_eq!(LanguageTable::parse(&t.to_text()).unwrap(), t);
    }

    #[test]
    fn normalization() {
        assert_eq!(normalize_name("Twenty six"), "twentysix");
        assert_eq!(normalize_name("twenty-six"), "twentysix");
        let t = LanguageTable::parse("rank a 1\nrank b 2\nname 1 A - b b\n").unwrap();
        assert_eq!(t.name(1), Some("abb"));
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(matches!(LanguageTable::parse("rank a 1\nrank b 1\n"), Err(AngeliniError::DuplicateRank('b'))));
        assert!(matches!(LanguageTable::parse("rank a 1\nrank a 2\n"), Err(AngeliniError::DuplicateRank('a'))));
        assert!(matches!(
            LanguageTable::parse("rank a 1\nname 3 ab\n"),
            Err(AngeliniError::UnrankedLetter { letter: 'b', value: 3 })
        ));
        assert!(matches!(LanguageTable::parse("rank a 0\n"), Err(AngeliniError::Parse { line: 1, .. })));
        assert!(matches!(LanguageTable::parse("# ok\nspell a 1\n"), Err(AngeliniError::Parse { line: 2, .. })));
        assert!(matches!(LanguageTable::parse("rank a 1\nname 1 -\n"), Err(AngeliniError::Parse { line: 2, .. })));
    }
}

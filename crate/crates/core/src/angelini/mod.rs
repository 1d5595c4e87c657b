//! Angelini's self-describing sequence: spell the terms out, replace each
//! letter by its alphabet rank, and the absolute differences of
//! neighbouring ranks give back the terms.

mod table;

use std::collections::BTreeMap;

pub use table::{normalize_name, LanguageTable};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AngeliniError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("letter {0:?} is ranked twice or shares a rank")]
    DuplicateRank(char),
    #[error("letter {letter:?} in the name of {value} has no rank")]
    UnrankedLetter { letter: char, value: u32 },
    #[error("empty name for {0}")]
    EmptyName(u32),
    #[error("inadmissible seed {0}: it does not describe the first two letters of its own name")]
    InadmissibleSeed(u32),
    #[error("name missing for value {0}")]
    MissingName(u32),
    #[error("sequence stalled after {0} terms: the spelled letters ran out")]
    Stalled(usize),
    #[error("frequencies of an empty sequence")]
    Empty,
}

/// Generation state: the terms found so far and the ranks of the letters
/// spelled so far. Term `i` is the rank difference of letters `i` and `i+1`.
#[derive(Debug, Clone)]
pub struct SelfSequence<'t> {
    table: &'t LanguageTable,
    terms: Vec<u32>,
    letters: Vec<u32>,
    // terms[..spelled] have been written out into `letters`
    spelled: usize,
}

impl<'t> SelfSequence<'t> {
    pub fn new(seed: u32, table: &'t LanguageTable) -> Result<Self, AngeliniError> {
        if !admissible(seed, table) {
            return Err(AngeliniError::InadmissibleSeed(seed));
        }
        let letters = table.spell(seed).expect("admissible seeds have names").collect();
        Ok(SelfSequence { table, terms: vec![seed], letters, spelled: 1 })
    }

    pub fn terms(&self) -> &[u32] {
        &self.terms
    }

    /// Letter ranks, in order.
    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    /// Produce the next term.
    pub fn advance(&mut self) -> Result<u32, AngeliniError> {
        let i = self.terms.len();
        while self.letters.len() < i + 2 {
            if self.spelled == self.terms.len() {
                return Err(AngeliniError::Stalled(i));
            }
            let v = self.terms[self.spelled];
            let ranks = self.table.spell(v).ok_or(AngeliniError::MissingName(v))?;
            self.letters.extend(ranks);
            self.spelled += 1;
        }
        let t = self.letters[i + 1].abs_diff(self.letters[i]);
        self.terms.push(t);
        Ok(t)
    }

    pub fn extend_to(&mut self, k: usize) -> Result<(), AngeliniError> {
        while self.terms.len() < k {
            self.advance()?;
        }
        Ok(())
    }

    pub fn into_terms(self) -> Vec<u32> {
        self.terms
    }
}

fn admissible(v: u32, table: &LanguageTable) -> bool {
    let Some(mut ranks) = table.spell(v) else { return false };
    match (ranks.next(), ranks.next()) {
        (Some(a), Some(b)) => a.abs_diff(b) == v,
        _ => false,
    }
}

/// First `k` terms of the self-describing sequence that starts at `seed`.
pub fn generate(seed: u32, k: usize, table: &LanguageTable) -> Result<Vec<u32>, AngeliniError> {
    let mut seq = SelfSequence::new(seed, table)?;
    seq.extend_to(k)?;
    let mut terms = seq.into_terms();
    terms.truncate(k);
    Ok(terms)
}

/// Values whose name starts with two letters whose ranks differ by the value.
pub fn admissible_seeds(table: &LanguageTable) -> Vec<u32> {
    table.names().map(|(v, _)| v).filter(|&v| admissible(v, table)).collect()
}

/// Whether spelling `terms` and differencing neighbouring letter ranks
/// reproduces `terms`. Terms without a name fail the check.
pub fn verify_self_describing(terms: &[u32], table: &LanguageTable) -> bool {
    let mut letters = Vec::new();
    for &t in terms {
        match table.spell(t) {
            Some(r) => letters.extend(r),
            None => return false,
        }
    }
    terms
        .iter()
        .zip(letters.windows(2))
        .all(|(&t, pair)| pair[0].abs_diff(pair[1]) == t)
}

/// Relative frequency of each distinct value.
pub fn frequencies(terms: &[u32]) -> Result<BTreeMap<u32, f64>, AngeliniError> {
    if terms.is_empty() {
        return Err(AngeliniError::Empty);
    }
    let mut counts = BTreeMap::new();
    for &t in terms {
        *counts.entry(t).or_insert(0usize) += 1;
    }
    let n = terms.len() as f64;
    Ok(counts.into_iter().map(|(v, c)| (v, c as f64 / n)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    const PREFIX: [u32; 30] = [
        1, 9, 9, 5, 5, 9, 9, 5, 5, 9, 1, 3, 13, 17, 1, 3, 13, 17, 9, 5, 5, 9, 9, 5, 5, 9, 1, 3, 13, 17,
    ];

    #[test]
    fn english_prefix() {
        let en = LanguageTable::english();
        assert_eq!(generate(1, 30, &en).unwrap(), PREFIX);
        assert_eq!(generate(1, 1, &en).unwrap(), [1]);
    }

    #[test]
    fn letters_follow_the_spelling() {
        let en = LanguageTable::english();
        let mut seq = SelfSequence::new(1, &en).unwrap();
        seq.extend_to(12).unwrap();
        let spelled: String = "one nine nine five".split(' ').collect();
        let ranks: Vec<u32> = spelled.chars().map(|c| en.rank(c).unwrap()).collect();
        assert_eq!(&seq.letters()[..ranks.len()], &ranks[..]);
    }

    #[test]
    fn inadmissible_and_missing() {
        let en = LanguageTable::english();
        assert_eq!(generate(2, 5, &en), Err(AngeliniError::InadmissibleSeed(2)));
        assert_eq!(generate(40, 5, &en), Err(AngeliniError::InadmissibleSeed(40)));
        // drop the name of 9: the second term cannot be spelled
        let no_nine = en.restricted(|v| v != 9);
        assert_eq!(generate(1, 30, &no_nine), Err(AngeliniError::MissingName(9)));
    }

    #[test]
    fn stalls_when_letters_run_out() {
        let t = LanguageTable::from_parts([('a', 1), ('f', 6)], [(5, "af".to_string())]).unwrap();
        assert_eq!(admissible_seeds(&t), [5]);
        assert_eq!(generate(5, 1, &t).unwrap(), [5]);
        assert_eq!(generate(5, 2, &t), Err(AngeliniError::Stalled(1)));
    }

    #[test]
    fn seeds() {
        let en = LanguageTable::english();
        assert_eq!(admissible_seeds(&en), [1]);
        assert!(admissible_seeds(&en.restricted(|v| v >= 2)).is_empty());
    }

    #[test]
    fn verification() {
        let en = LanguageTable::english();
        assert!(verify_self_describing(&PREFIX, &en));
        assert!(!verify_self_describing(&[1, 9, 9, 5, 6], &en));
        assert!(verify_self_describing(&[], &en));
        assert!(!verify_self_describing(&[1, 9, 40], &en));
    }

    #[test]
    fn frequency_table() {
        let f = frequencies(&PREFIX).unwrap();
        // nine of the thirty displayed terms are 9
        assert_eq!(f[&9], 9.0 / 30.0);
        assert!((f.values().sum::<f64>() - 1.0).abs() < 1e-12);
        assert_eq!(frequencies(&[5, 5, 5]).unwrap(), BTreeMap::from([(5, 1.0)]));
        assert_eq!(frequencies(&[]), Err(AngeliniError::Empty));
    }

    #[test]
    fn prefixes_verify_and_nest() {
        let en = LanguageTable::english();
        let long = generate(1, 10_000, &en).unwrap();
        for k in [1, 2, 7, 100, 999, 10_000] {
            let short = generate(1, k, &en).unwrap();
            assert_eq!(&long[..k], &short[..]);
            assert!(verify_self_describing(&short, &en));
        }
        let forbidden = [16, 19, 20, 22, 23, 24, 25, 26];
        assert!(long.iter().all(|t| !forbidden.contains(t)));
        // the doubled e of "three" at letters 45 and 46
        assert_eq!(long[45], 0);
    }
}

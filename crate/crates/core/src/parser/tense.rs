//! Simple-past detection. The resolver ignores the times of utterances
//! whose evoking clause is in the simple past or past perfect; this
//! keeps times from reported events and habits off the focus list.

use super::token::{Token, TokenKind};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tense {
    Past,
    #[default]
    Nonpast,
}

const PAST_VERBS: &[&str] = &["was", "were", "had", "did", "went", "got"];
const FUTURE_MARKERS: &[&str] = &["will", "going", "can", "could", "lets", "shall", "gonna"];

fn is_future_marker(tokens: &[Token], i: usize) -> bool {
    let t = &tokens[i];
    if FUTURE_MARKERS.contains(&t.norm.as_str()) {
        return true;
    }
    // "how about"
    t.norm == "how" && tokens.get(i + 1).is_some_and(|n| n.norm == "about")
}

/// Words that are clearly not past-tense verbs despite ending in "ed".
const ED_STOPLIST: &[&str] = &["wed", "red", "need", "indeed", "speed", "bed", "hundred"];

/// Past iff a closed-list past verb occurs anywhere (or a regular "-ed"
/// form occurs before the first temporal token) with no future marker
/// earlier in the utterance.
pub fn detect_tense(tokens: &[Token], first_temporal: Option<usize>) -> Tense {
    for (i, t) in tokens.iter().enumerate() {
        let closed = t.kind == TokenKind::Word && PAST_VERBS.contains(&t.norm.as_str());
        let regular_ed = t.kind == TokenKind::Word
            && t.norm.len() > 3
            && t.norm.ends_with("ed")
            && !ED_STOPLIST.contains(&t.norm.as_str())
            && first_temporal.is_none_or(|ft| i < ft);
        if closed || regular_ed {
            let blocked = (0..i).any(|j| is_future_marker(tokens, j));
            if !blocked {
                return Tense::Past;
            }
        }
    }
    Tense::Nonpast
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::token::tokenize;

    #[test]
    fn past_examples() {
        let toks = tokenize("last week uh, I got a job");
        assert_eq!(detect_tense(&toks, Some(0)), Tense::Past);

        let toks = tokenize("I went at around six in the morning");
        assert_eq!(detect_tense(&toks, Some(3)), Tense::Past);

        let toks = tokenize("Did you go with my mother?");
        assert_eq!(detect_tense(&toks, None), Tense::Past);
    }

    #[test]
    fn nonpast_examples() {
        let toks = tokenize("Let's meet tomorrow");
        assert_eq!(detect_tense(&toks, Some(2)), Tense::Nonpast);

        let toks = tokenize("How about Wednesday at 2?");
        assert_eq!(detect_tense(&toks, Some(2)), Tense::Nonpast);

        let toks = tokenize("I would like to do it at two p.m. Wednesday");
        assert_eq!(detect_tense(&toks, Some(7)), Tense::Nonpast);
    }

    #[test]
    fn trailing_participle_is_not_past() {
        // A regular -ed form after the temporal expression does not make
        // the clause past.
        let toks = tokenize("Tomorrow is fine as discussed");
        assert_eq!(detect_tense(&toks, Some(0)), Tense::Nonpast);
    }
}

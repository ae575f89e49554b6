//! Tokenizer and word tables for English temporal expressions.

use crate::calendar::Weekday;
use crate::model::TimeOfDay;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TokenKind {
    Word,
    /// A cardinal number, from digits or number words.
    Number(u16),
    /// An ordinal ("19th", "thirtieth").
    Ordinal(u16),
    /// "H:MM" with a plausible 12-hour hour.
    ClockTime(u8, u8),
    Punct,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub surface: String,
    pub norm: String,
    pub kind: TokenKind,
}

impl Token {
    fn new(surface: &str) -> Token {
        let norm = normalize_word(surface);
        let kind = classify(&norm);
        Token {
            surface: surface.to_string(),
            norm,
            kind,
        }
    }
}

fn normalize_word(s: &str) -> String {
    let lower = s.to_lowercase();
    match lower.as_str() {
        "a.m." | "a.m" => "am".to_string(),
        "p.m." | "p.m" => "pm".to_string(),
        "let's" | "lets" => "lets".to_string(),
        _ => lower,
    }
}

fn classify(norm: &str) -> TokenKind {
    if norm.chars().all(|c| c.is_ascii_punctuation()) && !norm.is_empty() {
        return TokenKind::Punct;
    }
    if let Some((h, m)) = parse_clock(norm) {
        return TokenKind::ClockTime(h, m);
    }
    if let Ok(n) = norm.parse::<u16>() {
        return TokenKind::Number(n);
    }
    if let Some(n) = parse_digit_ordinal(norm) {
        return TokenKind::Ordinal(n);
    }
    if let Some(n) = ordinal_word(norm) {
        return TokenKind::Ordinal(n);
    }
    if let Some(n) = number_word(norm) {
        return TokenKind::Number(n);
    }
    TokenKind::Word
}

fn parse_clock(s: &str) -> Option<(u8, u8)> {
    let (h, m) = s.split_once(':')?;
    let h: u8 = h.parse().ok()?;
    let m: u8 = m.parse().ok()?;
    ((1..=12).contains(&h) && m < 60).then_some((h, m))
}

fn parse_digit_ordinal(s: &str) -> Option<u16> {
    let n = s
        .strip_suffix("st")
        .or_else(|| s.strip_suffix("nd"))
        .or_else(|| s.strip_suffix("rd"))
        .or_else(|| s.strip_suffix("th"))?;
    n.parse().ok()
}

/// Lossless tokenization: the concatenation of surfaces reconstructs the
/// utterance up to whitespace. Trailing punctuation splits off words;
/// clock times and dotted abbreviations stay whole.
pub fn tokenize(text: &str) -> Vec<Token> {
    let mut tokens = Vec::new();
    for raw in text.split_whitespace() {
        let mut word = raw;
        let mut trailing: Vec<&str> = Vec::new();
        // Keep "p.m." style abbreviations intact; otherwise peel trailing
        // punctuation into its own tokens.
        loop {
            let chars: Vec<char> = word.chars().collect();
            if chars.len() > 1 {
                let last = chars[chars.len() - 1];
                let is_abbrev = last == '.'
                    && matches!(normalize_word(word).as_str(), "am" | "pm");
                if last.is_ascii_punctuation() && last != ':' && !is_abbrev && last != '\'' {
                    let cut = word.len() - last.len_utf8();
                    trailing.push(&word[cut..]);
                    word = &word[..cut];
                    continue;
                }
            }
            break;
        }
        if !word.is_empty() {
            tokens.push(Token::new(word));
        }
        for p in trailing.into_iter().rev() {
            tokens.push(Token::new(p));
        }
    }
    tokens
}

pub fn number_word(s: &str) -> Option<u16> {
    Some(match s {
        "one" => 1,
        "two" => 2,
        "three" => 3,
        "four" => 4,
        "five" => 5,
        "six" => 6,
        "seven" => 7,
        "eight" => 8,
        "nine" => 9,
        "ten" => 10,
        "eleven" => 11,
        "twelve" => 12,
        "thirteen" => 13,
        "fourteen" => 14,
        "fifteen" => 15,
        "sixteen" => 16,
        "seventeen" => 17,
        "eighteen" => 18,
        "nineteen" => 19,
        "twenty" => 20,
        "twenty-one" => 21,
        "twenty-two" => 22,
        "twenty-three" => 23,
        "twenty-four" => 24,
        "twenty-five" => 25,
        "twenty-six" => 26,
        "twenty-seven" => 27,
        "twenty-eight" => 28,
        "twenty-nine" => 29,
        "thirty" => 30,
        "thirty-one" => 31,
        "forty" => 40,
        "forty-five" => 45,
        "fifty" => 50,
        _ => return None,
    })
}

pub fn ordinal_word(s: &str) -> Option<u16> {
    Some(match s {
        "first" => 1,
        "second" => 2,
        "third" => 3,
        "fourth" => 4,
        "fifth" => 5,
        "sixth" => 6,
        "seventh" => 7,
        "eighth" => 8,
        "ninth" => 9,
        "tenth" => 10,
        "eleventh" => 11,
        "twelfth" => 12,
        "thirteenth" => 13,
        "fourteenth" => 14,
        "fifteenth" => 15,
        "sixteenth" => 16,
        "seventeenth" => 17,
        "eighteenth" => 18,
        "nineteenth" => 19,
        "twentieth" => 20,
        "twenty-first" => 21,
        "twenty-second" => 22,
        "twenty-third" => 23,
        "twenty-fourth" => 24,
        "twenty-fifth" => 25,
        "twenty-sixth" => 26,
        "twenty-seventh" => 27,
        "twenty-eighth" => 28,
        "twenty-ninth" => 29,
        "thirtieth" => 30,
        "thirty-first" => 31,
        _ => return None,
    })
}

pub fn weekday_word(s: &str) -> Option<Weekday> {
    Some(match s {
        "monday" | "mon" => Weekday::Monday,
        "tuesday" | "tue" | "tues" => Weekday::Tuesday,
        "wednesday" | "wed" => Weekday::Wednesday,
        "thursday" | "thu" | "thur" | "thurs" => Weekday::Thursday,
        "friday" | "fri" => Weekday::Friday,
        "saturday" | "sat" => Weekday::Saturday,
        "sunday" | "sun" => Weekday::Sunday,
        _ => return None,
    })
}

pub fn month_word(s: &str) -> Option<u8> {
    Some(match s {
        "january" | "jan" => 1,
        "february" | "feb" => 2,
        "march" | "mar" => 3,
        "april" | "apr" => 4,
        "may" => 5,
        "june" | "jun" => 6,
        "july" | "jul" => 7,
        "august" | "aug" => 8,
        "september" | "sep" | "sept" => 9,
        "october" | "oct" => 10,
        "november" | "nov" => 11,
        "december" | "dec" => 12,
        _ => return None,
    })
}

pub fn time_of_day_word(s: &str) -> Option<TimeOfDay> {
    Some(match s {
        "morning" => TimeOfDay::Morning,
        "mid-morning" | "midmorning" => TimeOfDay::MidMorning,
        "noon" | "lunch" | "lunchtime" => TimeOfDay::Noon,
        "afternoon" => TimeOfDay::Afternoon,
        "mid-afternoon" | "midafternoon" => TimeOfDay::MidAfternoon,
        "evening" => TimeOfDay::Evening,
        "night" => TimeOfDay::Night,
        "midnight" => TimeOfDay::Midnight,
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokenize_examples() {
        let toks = tokenize("From two to four");
        let kinds: Vec<_> = toks.iter().map(|t| t.kind).collect();
        assert_eq!(
            kinds,
            vec![
                TokenKind::Word,
                TokenKind::Number(2),
                TokenKind::Word,
                TokenKind::Number(4)
            ]
        );

        assert!(tokenize("").is_empty());

        let toks = tokenize("Thursday the 11th of August");
        assert_eq!(toks[2].kind, TokenKind::Ordinal(11));
        assert_eq!(toks[4].norm, "august");

        let toks = tokenize("at 2:30 p.m., ok?");
        assert_eq!(toks[1].kind, TokenKind::ClockTime(2, 30));
        assert_eq!(toks[2].norm, "pm");
        assert_eq!(toks[3].kind, TokenKind::Punct);
    }

    #[test]
    fn tokenize_is_lossless() {
        let text = "Then how does from two thirty to four thirty seem to you?";
        let toks = tokenize(text);
        let rebuilt: String = toks.iter().map(|t| t.surface.as_str()).collect();
        let squashed: String = text.split_whitespace().collect();
        assert_eq!(rebuilt, squashed);
    }

    #[test]
    fn malformed_clocktime_degrades() {
        let toks = tokenize("25:99");
        assert_eq!(toks[0].kind, TokenKind::Word);
    }

    #[test]
    fn ordinal_words() {
        assert_eq!(ordinal_word("thirtieth"), Some(30));
        assert_eq!(ordinal_word("thirty-first"), Some(31));
        assert_eq!(parse_digit_ordinal("23rd"), Some(23));
    }
}

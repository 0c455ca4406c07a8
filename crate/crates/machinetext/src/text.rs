//! Text cleaning, tokenization, sentence splitting and the English heuristic.
//!
//! All rules here are frozen: the token grammar, the abbreviation list and the
//! character classes are fixed data so that every downstream metric is
//! reproducible bit for bit.

use std::collections::HashSet;
use std::sync::OnceLock;

use unicode_normalization::UnicodeNormalization;

use crate::lexicon;

/// Sentinel token used by the vocabulary-intersection ablation. The tokenizer
/// passes it through unchanged so ablated token streams survive re-tokenization.
pub const UNK_TOKEN: &str = "<unk>";

const BASIC_PUNCT: &str = ".,;:!?()\"'-";

fn is_kept(c: char) -> bool {
    c.is_alphanumeric() || c.is_whitespace() || BASIC_PUNCT.contains(c)
}

/// Map typographic punctuation onto its ASCII equivalent before filtering.
fn fold_punct(c: char) -> char {
    match c {
        '\u{2018}' | '\u{2019}' | '\u{02BC}' => '\'',
        '\u{201C}' | '\u{201D}' => '"',
        '\u{2010}' | '\u{2011}' | '\u{2012}' | '\u{2013}' | '\u{2014}' | '\u{2015}' => '-',
        '\u{2026}' => '.',
        _ => c,
    }
}

/// Normalize and scrub raw text.
///
/// NFC-normalizes, folds typographic punctuation to ASCII, drops every
/// character outside letters/digits/basic punctuation, collapses whitespace
/// runs to single spaces and removes isolated single-digit words
/// (multi-digit numbers are kept). Total and idempotent.
pub fn clean_text(raw: &str) -> String {
    let filtered: String = raw
        .nfc()
        .map(fold_punct)
        .filter(|&c| is_kept(c))
        .collect();
    let words = filtered
        .split_whitespace()
        .filter(|w| !(w.len() == 1 && w.chars().all(|c| c.is_ascii_digit())));
    let mut out = String::with_capacity(filtered.len());
    for w in words {
        if !out.is_empty() {
            out.push(' ');
        }
        out.push_str(w);
    }
    out
}

fn is_latin_letter(c: char) -> bool {
    c.is_ascii_alphabetic()
        || matches!(u32::from(c), 0xC0..=0x24F | 0x1E00..=0x1EFF)
}

/// Binary English heuristic: ≥90% of alphabetic characters must be Latin
/// script and ≥5% of tokens must appear in the bundled stopword or
/// easy-word lists.
pub fn is_english(text: &str) -> bool {
    let mut alpha = 0usize;
    let mut latin = 0usize;
    for c in text.chars() {
        if c.is_alphabetic() {
            alpha += 1;
            if is_latin_letter(c) {
                latin += 1;
            }
        }
    }
    if alpha == 0 || (latin as f64) < 0.9 * alpha as f64 {
        return false;
    }
    let tokens = tokenize(text, false);
    if tokens.is_empty() {
        return false;
    }
    let stops = lexicon::stopwords();
    let easy = lexicon::easy_words();
    let known = tokens
        .iter()
        .filter(|t| stops.contains(t.as_str()) || easy.contains(t.as_str()))
        .count();
    known as f64 >= 0.05 * tokens.len() as f64
}

fn scan_tokens(text: &str, out: &mut Vec<String>, lowercase: bool) {
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c == '<' && chars[i..].starts_with(&['<', 'u', 'n', 'k', '>']) {
            out.push(UNK_TOKEN.to_string());
            i += 5;
        } else if c.is_alphabetic() {
            let start = i;
            i += 1;
            while i < chars.len()
                && (chars[i].is_alphanumeric() || chars[i] == '\'' || chars[i] == '-')
            {
                i += 1;
            }
            let tok: String = chars[start..i].iter().collect();
            out.push(if lowercase { tok.to_lowercase() } else { tok });
        } else if c.is_ascii_digit() {
            let start = i;
            i += 1;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push(chars[start..i].iter().collect());
        } else {
            i += 1;
        }
    }
}

/// Lowercased word tokens: `letter(letter|digit|'|-)*` plus standalone digit
/// runs, order preserved. With `drop_stopwords` the bundled stopword list is
/// filtered out.
pub fn tokenize(text: &str, drop_stopwords: bool) -> Vec<String> {
    let mut toks = Vec::new();
    scan_tokens(text, &mut toks, true);
    if drop_stopwords {
        let stops = lexicon::stopwords();
        toks.retain(|t| !stops.contains(t.as_str()));
    }
    toks
}

/// Same grammar as [`tokenize`] but preserving case; used by the readability
/// formulas and the POS tagger, which need capitalization.
pub fn tokenize_cased(text: &str) -> Vec<String> {
    let mut toks = Vec::new();
    scan_tokens(text, &mut toks, false);
    toks
}

fn abbreviations() -> &'static HashSet<&'static str> {
    static SET: OnceLock<HashSet<&'static str>> = OnceLock::new();
    SET.get_or_init(|| {
        lexicon::raw::ABBREVIATIONS
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .collect()
    })
}

fn ends_with_abbreviation(buf: &str) -> bool {
    let lower = buf.to_lowercase();
    abbreviations().iter().any(|abbr| {
        lower.ends_with(abbr)
            && lower[..lower.len() - abbr.len()]
                .chars()
                .next_back()
                .map_or(true, char::is_whitespace)
    })
}

/// Split on `.`/`!`/`?` followed by whitespace and an uppercase letter (or end
/// of text). The bundled abbreviation list never terminates a sentence.
/// Joining the result with single spaces preserves every non-whitespace
/// character of the input.
pub fn split_sentences(text: &str) -> Vec<String> {
    let chars: Vec<char> = text.chars().collect();
    let mut sentences = Vec::new();
    let mut buf = String::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        buf.push(c);
        if matches!(c, '.' | '!' | '?') {
            let mut j = i + 1;
            while j < chars.len() && chars[j].is_whitespace() {
                j += 1;
            }
            let saw_space = j > i + 1;
            let boundary = j < chars.len()
                && saw_space
                && chars[j].is_uppercase()
                && !(c == '.' && ends_with_abbreviation(&buf));
            if boundary {
                let s = buf.trim();
                if !s.is_empty() {
                    sentences.push(s.to_string());
                }
                buf.clear();
                i = j;
                continue;
            }
        }
        i += 1;
    }
    let s = buf.trim();
    if !s.is_empty() {
        sentences.push(s.to_string());
    }
    sentences
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn clean_collapses_whitespace() {
        assert_eq!(clean_text("a\t\tb   c"), "a b c");
    }

    #[test]
    fn clean_drops_isolated_single_digit_keeps_multidigit() {
        assert_eq!(clean_text("see 7 stars, 42 total"), "see stars, 42 total");
    }

    #[test]
    fn clean_removes_special_symbols() {
        assert_eq!(clean_text("résumé ©2020"), "résumé 2020");
    }

    #[test]
    fn clean_is_total_on_empty() {
        assert_eq!(clean_text(""), "");
    }

    #[test]
    fn english_accepts_plain_prose() {
        assert!(is_english("the cat sat on the mat"));
    }

    #[test]
    fn english_rejects_cyrillic() {
        assert!(!is_english("Это русский текст без латиницы"));
    }

    #[test]
    fn english_rejects_half_latin_half_cyrillic() {
        // 50% Latin alphabetic characters is well under the 0.9 threshold.
        let text = "the cat sat ето кот сидел";
        let alpha: Vec<char> = text.chars().filter(|c| c.is_alphabetic()).collect();
        let latin = alpha.iter().filter(|&&c| is_latin_letter(c)).count();
        assert!((latin as f64) < 0.9 * alpha.len() as f64);
        assert!(!is_english(text));
    }

    #[test]
    fn tokenize_strips_punctuation() {
        assert_eq!(tokenize("The cat's mat!", false), vec!["the", "cat's", "mat"]);
    }

    #[test]
    fn tokenize_drops_stopwords() {
        assert_eq!(tokenize("The cat's mat!", true), vec!["cat's", "mat"]);
    }

    #[test]
    fn tokenize_keeps_hyphenated_compounds_and_digits() {
        assert_eq!(
            tokenize("state-of-the-art GPT2", false),
            vec!["state-of-the-art", "gpt2"]
        );
    }

    #[test]
    fn tokenize_passes_unk_through() {
        assert_eq!(tokenize("a <unk> b", false), vec!["a", UNK_TOKEN, "b"]);
    }

    #[test]
    fn split_two_terminals() {
        assert_eq!(split_sentences("A b. C d!"), vec!["A b.", "C d!"]);
    }

    #[test]
    fn split_respects_abbreviations() {
        assert_eq!(
            split_sentences("Dr. Smith left. He ran."),
            vec!["Dr. Smith left.", "He ran."]
        );
        assert_eq!(
            split_sentences("See Smith et al. For details read on."),
            vec!["See Smith et al. For details read on."]
        );
    }

    #[test]
    fn split_empty_is_empty() {
        assert!(split_sentences("").is_empty());
    }

    #[test]
    fn split_no_terminal_is_single_sentence() {
        assert_eq!(split_sentences("no terminal here"), vec!["no terminal here"]);
    }

    fn non_ws(s: &str) -> String {
        s.chars().filter(|c| !c.is_whitespace()).collect()
    }

    proptest! {
        #[test]
        fn clean_is_idempotent(s in "\\PC{0,200}") {
            let once = clean_text(&s);
            prop_assert_eq!(clean_text(&once), once);
        }

        #[test]
        fn tokenize_nostop_is_subsequence(s in "[a-zA-Z ',.!-]{0,120}") {
            let full = tokenize(&s, false);
            let nostop = tokenize(&s, true);
            let mut it = full.iter();
            for t in &nostop {
                prop_assert!(it.any(|u| u == t));
            }
        }

        #[test]
        fn sentences_preserve_non_whitespace(s in "[a-zA-Z0-9 ,.!?'-]{0,200}") {
            let joined = split_sentences(&s).join(" ");
            prop_assert_eq!(non_ws(&joined), non_ws(&s));
        }
    }
}

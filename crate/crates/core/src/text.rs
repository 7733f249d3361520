//! Canonical text preparation shared by extraction, alignment and
//! normalization: diacritic folding, OCR artifact stripping, and word
//! normalization.

use unicode_normalization::UnicodeNormalization;

/// Remove diacritic marks: canonical decomposition, then drop combining marks.
pub fn fold_diacritics(s: &str) -> String {
    s.nfd().filter(|c| !is_combining_mark(*c)).collect()
}

fn is_combining_mark(c: char) -> bool {
    matches!(c, '\u{0300}'..='\u{036F}' | '\u{1AB0}'..='\u{1AFF}' | '\u{20D0}'..='\u{20FF}' | '\u{FE20}'..='\u{FE2F}')
}

/// Canonical form for character-level alignment: uppercased, diacritic-folded,
/// whitespace runs collapsed to a single space. Punctuation is retained;
/// alignment scores count spaces and punctuation as ordinary characters.
pub fn prep_for_alignment(s: &str) -> String {
    let folded = fold_diacritics(s);
    let mut out = String::with_capacity(folded.len());
    let mut last_space = true;
    for c in folded.chars() {
        if c.is_whitespace() {
            if !last_space {
                out.push(' ');
                last_space = true;
            }
        } else {
            for u in c.to_uppercase() {
                out.push(u);
            }
            last_space = false;
        }
    }
    while out.ends_with(' ') {
        out.pop();
    }
    out
}

/// Markers that replace superscript symbols when journals submit affiliations.
/// They survive into the raw strings and must be stripped before comparisons.
const ARTIFACT_MARKERS: &[&str] = &["double dagger", "daggerdagger", "(dagger)", "dagger", "*", "†", "‡"];

/// Strip leading OCR/formatting artifact markers from a phrase.
pub fn strip_ocr_artifacts(s: &str) -> &str {
    let mut rest = s.trim_start();
    'outer: loop {
        for marker in ARTIFACT_MARKERS {
            let head: String = rest.chars().take(marker.chars().count()).collect();
            if head.to_lowercase() == *marker {
                rest = rest[head.len()..].trim_start();
                continue 'outer;
            }
        }
        return rest;
    }
}

/// Normalize one word token for word-level comparison: diacritic-folded,
/// uppercased, punctuation removed. May come back empty (e.g. a bare "&").
pub fn normalize_word(token: &str) -> String {
    fold_diacritics(token)
        .chars()
        .filter(|c| c.is_alphanumeric())
        .flat_map(|c| c.to_uppercase())
        .collect()
}

/// Fold a token or phrase into the key form used for gazetteer lookups:
/// lowercased, diacritic-folded, punctuation dropped, single spaces.
pub fn fold_key(s: &str) -> String {
    let folded = fold_diacritics(s);
    let mut out = String::with_capacity(folded.len());
    let mut last_space = true;
    for c in folded.chars() {
        if c.is_alphanumeric() {
            for l in c.to_lowercase() {
                out.push(l);
            }
            last_space = false;
        } else if !last_space {
            out.push(' ');
            last_space = true;
        }
    }
    while out.ends_with(' ') {
        out.pop();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn folds_diacritics() {
        assert_eq!(fold_diacritics("Autònoma"), "Autonoma");
        assert_eq!(fold_diacritics("hôpital"), "hopital");
        assert_eq!(fold_diacritics("Universität"), "Universitat");
    }

    #[test]
    fn alignment_prep_keeps_punctuation() {
        assert_eq!(prep_for_alignment("St. Luke's  and\tRoosevelt"), "ST. LUKE'S AND ROOSEVELT");
    }

    #[test]
    fn strips_artifact_markers() {
        assert_eq!(strip_ocr_artifacts("daggerDepartment of Pediatrics"), "Department of Pediatrics");
        assert_eq!(strip_ocr_artifacts("*Division of Pediatric Cardiology"), "Division of Pediatric Cardiology");
        assert_eq!(strip_ocr_artifacts("(dagger) ARS"), "ARS");
        assert_eq!(strip_ocr_artifacts("double dagger Unit"), "Unit");
        // A word that merely shares a prefix with the marker is untouched.
        assert_eq!(strip_ocr_artifacts("Daggett Research Center"), "Daggett Research Center");
    }

    #[test]
    fn word_normalization() {
        assert_eq!(normalize_word("LUKE'S"), "LUKES");
        assert_eq!(normalize_word("St."), "ST");
        assert_eq!(normalize_word("Barnes-Jewish"), "BARNESJEWISH");
        assert_eq!(normalize_word("&"), "");
    }

    #[test]
    fn key_folding() {
        assert_eq!(fold_key("St. Louis"), "st louis");
        assert_eq!(fold_key("Université"), "universite");
        assert_eq!(fold_key("AUBURN  UNIVERSITY"), "auburn university");
    }
}

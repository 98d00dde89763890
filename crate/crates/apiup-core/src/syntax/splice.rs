use super::span::Span;
use crate::error::OverlapError;

/// One text edit: replace the span with the replacement (an empty span is an
/// insertion at that offset).
pub type Edit = (Span, String);

/// Apply edits to the original text. Untouched bytes are preserved exactly;
/// edits are applied right to left so earlier offsets stay valid. Spans must
/// be pairwise non-overlapping (touching is fine).
pub fn splice(text: &str, edits: &[Edit]) -> Result<String, OverlapError> {
    let mut sorted: Vec<&Edit> = edits.iter().collect();
    sorted.sort_by_key(|(span, _)| (span.lo, span.hi));
    for pair in sorted.windows(2) {
        let (a, _) = pair[0];
        let (b, _) = pair[1];
        if a.hi > b.lo || (a.lo == b.lo && a.hi == b.hi && !a.is_empty()) {
            return Err(OverlapError { a: *a, b: *b });
        }
    }
    let mut out = text.to_string();
    for (span, replacement) in sorted.into_iter().rev() {
        out.replace_range(span.lo..span.hi, replacement);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn no_edits_is_identity() {
        let t = "class A { }";
        assert_eq!(splice(t, &[]).unwrap(), t);
    }

    #[test]
    fn replaces_and_inserts() {
        let t = "ab cd ef";
        let out = splice(
            t,
            &[
                (Span::new(3, 5), "XY".into()),
                (Span::point(0), ">>".into()),
            ],
        )
        .unwrap();
        assert_eq!(out, ">>ab XY ef");
    }

    #[test]
    fn rejects_overlap() {
        let t = "abcdef";
        let err = splice(
            t,
            &[
                (Span::new(0, 3), "x".into()),
                (Span::new(2, 4), "y".into()),
            ],
        );
        assert!(err.is_err());
    }

    #[test]
    fn two_disjoint_edits_match_naive_rebuild() {
        // independent oracle: rebuild the string by manual concatenation
        let t = "hour = picker.getCurrentHour() + picker.getCurrentHour();";
        let a = Span::new(7, 30);
        let b = Span::new(33, 57);
        let expected = format!("{}{}{}{}{}", &t[..7], "first", &t[30..33], "second", &t[57..]);
        let out = splice(
            t,
            &[(a, "first".into()), (b, "second".into())],
        )
        .unwrap();
        assert_eq!(out, expected);
    }
}

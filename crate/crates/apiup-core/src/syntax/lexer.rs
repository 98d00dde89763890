use super::span::Span;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokenKind {
    Ident(String),
    Int(i64),
    Str(String),
    Char,
    // punctuation / operators, stored verbatim
    Punct(&'static str),
    Eof,
}

#[derive(Debug, Clone)]
pub struct Token {
    pub kind: TokenKind,
    pub span: Span,
}

impl Token {
    pub fn is_punct(&self, p: &str) -> bool {
        matches!(&self.kind, TokenKind::Punct(q) if *q == p)
    }

    pub fn ident(&self) -> Option<&str> {
        match &self.kind {
            TokenKind::Ident(s) => Some(s),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexError {
    pub offset: usize,
    pub message: String,
}

// Longest-first so that ">=" wins over ">".
const PUNCTS: &[&str] = &[
    "...", "&&", "||", "==", "!=", "<=", ">=", "{", "}", "(", ")", "[", "]", ";", ",", ".", "=",
    "<", ">", "+", "-", "*", "/", "%", "!", "@", "?", ":",
];

/// Tokenize Java-subset source. Whitespace and comments are skipped; their
/// bytes survive only in the original text, which all printing is based on.
pub fn lex(text: &str) -> Result<Vec<Token>, LexError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    'outer: while i < bytes.len() {
        let b = bytes[i];
        if b.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if b == b'/' && i + 1 < bytes.len() {
            if bytes[i + 1] == b'/' {
                while i < bytes.len() && bytes[i] != b'\n' {
                    i += 1;
                }
                continue;
            }
            if bytes[i + 1] == b'*' {
                let start = i;
                i += 2;
                while i + 1 < bytes.len() {
                    if bytes[i] == b'*' && bytes[i + 1] == b'/' {
                        i += 2;
                        continue 'outer;
                    }
                    i += 1;
                }
                return Err(LexError {
                    offset: start,
                    message: "unterminated block comment".into(),
                });
            }
        }
        if b == b'"' {
            let start = i;
            i += 1;
            let mut val = String::new();
            loop {
                if i >= bytes.len() {
                    return Err(LexError {
                        offset: start,
                        message: "unterminated string literal".into(),
                    });
                }
                match bytes[i] {
                    b'"' => {
                        i += 1;
                        break;
                    }
                    b'\\' if i + 1 < bytes.len() => {
                        val.push(bytes[i] as char);
                        val.push(bytes[i + 1] as char);
                        i += 2;
                    }
                    c => {
                        if c == b'\n' {
                            return Err(LexError {
                                offset: start,
                                message: "unterminated string literal".into(),
                            });
                        }
                        val.push(c as char);
                        i += 1;
                    }
                }
            }
            out.push(Token {
                kind: TokenKind::Str(val),
                span: Span::new(start, i),
            });
            continue;
        }
        if b == b'\'' {
            let start = i;
            i += 1;
            while i < bytes.len() && bytes[i] != b'\'' {
                if bytes[i] == b'\\' {
                    i += 1;
                }
                i += 1;
            }
            if i >= bytes.len() {
                return Err(LexError {
                    offset: start,
                    message: "unterminated char literal".into(),
                });
            }
            i += 1;
            out.push(Token {
                kind: TokenKind::Char,
                span: Span::new(start, i),
            });
            continue;
        }
        if b.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                i += 1;
            }
            let lit = &text[start..i];
            let val = lit.parse::<i64>().map_err(|_| LexError {
                offset: start,
                message: format!("unsupported numeric literal `{lit}`"),
            })?;
            out.push(Token {
                kind: TokenKind::Int(val),
                span: Span::new(start, i),
            });
            continue;
        }
        if b.is_ascii_alphabetic() || b == b'_' || b == b'$' {
            let start = i;
            while i < bytes.len()
                && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_' || bytes[i] == b'$')
            {
                i += 1;
            }
            out.push(Token {
                kind: TokenKind::Ident(text[start..i].to_string()),
                span: Span::new(start, i),
            });
            continue;
        }
        for p in PUNCTS {
            if text[i..].starts_with(p) {
                out.push(Token {
                    kind: TokenKind::Punct(p),
                    span: Span::new(i, i + p.len()),
                });
                i += p.len();
                continue 'outer;
            }
        }
        return Err(LexError {
            offset: i,
            message: format!("unexpected character `{}`", b as char),
        });
    }
    out.push(Token {
        kind: TokenKind::Eof,
        span: Span::point(text.len()),
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexes_call_statement() {
        let toks = lex("picker.getCurrentHour();").unwrap();
        let kinds: Vec<String> = toks.iter().map(|t| format!("{:?}", t.kind)).collect();
        assert_eq!(toks.len(), 7, "{kinds:?}");
        assert_eq!(toks[0].ident(), Some("picker"));
        assert!(toks[1].is_punct("."));
        assert!(toks[5].is_punct(";"));
    }

    #[test]
    fn comments_and_strings() {
        let toks = lex("a = \"x // y\"; // trailing\n/* b */ b").unwrap();
        assert_eq!(toks.iter().filter(|t| t.ident().is_some()).count(), 2);
        assert!(matches!(&toks[2].kind, TokenKind::Str(s) if s == "x // y"));
    }

    #[test]
    fn multi_char_operators() {
        let toks = lex("a >= b && c != d").unwrap();
        assert!(toks[1].is_punct(">="));
        assert!(toks[3].is_punct("&&"));
        assert!(toks[5].is_punct("!="));
    }
}

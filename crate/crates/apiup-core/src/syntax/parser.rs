use std::path::Path;

use super::ast::*;
use super::lexer::{lex, Token, TokenKind};
use super::span::{LineIndex, Span};
use crate::error::ParseError;

/// Parse a compilation unit. Top-level structure (package/imports/class
/// headers, brace balance) must be recognizable; a method whose *body* falls
/// outside the statement subset is kept with an opaque-body marker instead of
/// failing the whole file.
pub fn parse_unit(text: &str, path: &Path) -> Result<SourceUnit, ParseError> {
    let lines = LineIndex::new(text);
    let tokens = lex(text).map_err(|e| ParseError::at(&lines, e.offset, e.message))?;
    let mut p = Parser {
        text,
        tokens,
        pos: 0,
        lines: &lines,
    };
    let unit = p.compilation_unit(path)?;
    Ok(unit)
}

/// Parse exactly one statement (used for patch patterns).
pub fn parse_statement(text: &str) -> Result<Stmt, ParseError> {
    let lines = LineIndex::new(text);
    let tokens = lex(text).map_err(|e| ParseError::at(&lines, e.offset, e.message))?;
    let mut p = Parser {
        text,
        tokens,
        pos: 0,
        lines: &lines,
    };
    let stmt = p.statement()?;
    p.expect_eof()?;
    Ok(stmt)
}

/// Parse a statement sequence (used by tests and the evaluation oracle).
pub fn parse_statements(text: &str) -> Result<Vec<Stmt>, ParseError> {
    let lines = LineIndex::new(text);
    let tokens = lex(text).map_err(|e| ParseError::at(&lines, e.offset, e.message))?;
    let mut p = Parser {
        text,
        tokens,
        pos: 0,
        lines: &lines,
    };
    let mut stmts = Vec::new();
    while !p.at_eof() {
        stmts.push(p.statement()?);
    }
    Ok(stmts)
}

/// Parse exactly one expression.
pub fn parse_expression(text: &str) -> Result<Expr, ParseError> {
    let lines = LineIndex::new(text);
    let tokens = lex(text).map_err(|e| ParseError::at(&lines, e.offset, e.message))?;
    let mut p = Parser {
        text,
        tokens,
        pos: 0,
        lines: &lines,
    };
    let expr = p.expression()?;
    p.expect_eof()?;
    Ok(expr)
}

const MODIFIERS: &[&str] = &[
    "public",
    "private",
    "protected",
    "static",
    "final",
    "abstract",
    "synchronized",
    "native",
    "strictfp",
    "transient",
    "volatile",
    "default",
];

struct Parser<'a> {
    text: &'a str,
    tokens: Vec<Token>,
    pos: usize,
    lines: &'a LineIndex,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn peek_at(&self, n: usize) -> &Token {
        let i = (self.pos + n).min(self.tokens.len() - 1);
        &self.tokens[i]
    }

    fn at_eof(&self) -> bool {
        matches!(self.peek().kind, TokenKind::Eof)
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos < self.tokens.len() - 1 {
            self.pos += 1;
        }
        t
    }

    fn at_punct(&self, p: &str) -> bool {
        self.peek().is_punct(p)
    }

    fn at_kw(&self, kw: &str) -> bool {
        self.peek().ident() == Some(kw)
    }

    fn eat_punct(&mut self, p: &str) -> bool {
        if self.at_punct(p) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn err<T>(&self, expected: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::at(
            self.lines,
            self.peek().span.lo,
            format!("expected {}", expected.into()),
        ))
    }

    fn expect_punct(&mut self, p: &str) -> Result<Token, ParseError> {
        if self.at_punct(p) {
            Ok(self.bump())
        } else {
            self.err(format!("`{p}`"))
        }
    }

    fn expect_ident(&mut self) -> Result<Ident, ParseError> {
        match self.peek().kind.clone() {
            TokenKind::Ident(name) => {
                let t = self.bump();
                Ok(Ident {
                    name,
                    span: t.span,
                })
            }
            _ => self.err("identifier"),
        }
    }

    fn expect_eof(&mut self) -> Result<(), ParseError> {
        if self.at_eof() {
            Ok(())
        } else {
            self.err("end of input")
        }
    }

    // -- top level ----------------------------------------------------------

    fn compilation_unit(&mut self, path: &Path) -> Result<SourceUnit, ParseError> {
        let mut package = None;
        let mut imports = Vec::new();
        let mut decls = Vec::new();

        if self.at_kw("package") {
            let start = self.peek().span.lo;
            self.skip_to_semi()?;
            package = Some(Span::new(start, self.tokens[self.pos - 1].span.hi));
        }
        while self.at_kw("import") {
            let start = self.peek().span.lo;
            self.skip_to_semi()?;
            imports.push(Span::new(start, self.tokens[self.pos - 1].span.hi));
        }
        while !self.at_eof() {
            decls.push(self.type_decl()?);
        }
        Ok(SourceUnit {
            path: path.to_path_buf(),
            text: self.text.to_string(),
            package,
            imports,
            decls,
            lines: self.lines.clone(),
        })
    }

    fn skip_to_semi(&mut self) -> Result<(), ParseError> {
        while !self.at_eof() {
            if self.bump().is_punct(";") {
                return Ok(());
            }
        }
        self.err("`;`")
    }

    fn skip_annotations_and_modifiers(&mut self) {
        loop {
            if self.at_punct("@") {
                self.bump();
                while self.peek().ident().is_some() {
                    self.bump();
                    if !self.eat_punct(".") {
                        break;
                    }
                }
                if self.at_punct("(") {
                    let _ = self.skip_balanced("(", ")");
                }
                continue;
            }
            match self.peek().ident() {
                Some(id) if MODIFIERS.contains(&id) => {
                    self.bump();
                }
                _ => break,
            }
        }
    }

    /// Consume from the current `open` punct to its matching `close`.
    fn skip_balanced(&mut self, open: &str, close: &str) -> Result<Span, ParseError> {
        let start = self.expect_punct(open)?.span.lo;
        let mut depth = 1usize;
        while depth > 0 {
            if self.at_eof() {
                return self.err(format!("`{close}`"));
            }
            let t = self.bump();
            if t.is_punct(open) {
                depth += 1;
            } else if t.is_punct(close) {
                depth -= 1;
            }
        }
        Ok(Span::new(start, self.tokens[self.pos - 1].span.hi))
    }

    fn type_decl(&mut self) -> Result<TypeDecl, ParseError> {
        let start = self.peek().span.lo;
        self.skip_annotations_and_modifiers();
        if !(self.at_kw("class") || self.at_kw("interface") || self.at_kw("enum")) {
            return self.err("`class` or `interface`");
        }
        self.bump();
        let name = self.expect_ident()?;
        // extends/implements clauses are pass-through text
        while !self.at_punct("{") {
            if self.at_eof() {
                return self.err("`{`");
            }
            self.bump();
        }
        self.expect_punct("{")?;
        let mut members = Vec::new();
        while !self.at_punct("}") {
            if self.at_eof() {
                return self.err("`}`");
            }
            members.push(self.member()?);
        }
        let close = self.expect_punct("}")?;
        Ok(TypeDecl {
            name,
            span: Span::new(start, close.span.hi),
            members,
        })
    }

    fn member(&mut self) -> Result<Member, ParseError> {
        let start = self.peek().span.lo;
        self.skip_annotations_and_modifiers();
        if self.at_kw("class") || self.at_kw("interface") || self.at_kw("enum") {
            self.pos = self.token_index_at(start);
            return Ok(Member::Nested(self.type_decl()?));
        }

        // constructor: Ident '(' directly
        if self.peek().ident().is_some() && self.peek_at(1).is_punct("(") {
            let name = self.expect_ident()?;
            return self.finish_method(start, name);
        }

        // method: type name '(' — field otherwise
        let save = self.pos;
        if self.type_ahead() {
            let _ty = self.type_name()?;
            if self.peek().ident().is_some() && self.peek_at(1).is_punct("(") {
                let name = self.expect_ident()?;
                return self.finish_method(start, name);
            }
        }
        self.pos = save;

        // field or anything else member-shaped: raw text to `;` (or a
        // balanced brace group for initializer blocks)
        if self.at_punct("{") {
            let span = self.skip_balanced("{", "}")?;
            return Ok(Member::Field(Span::new(start, span.hi)));
        }
        while !self.at_eof() {
            if self.at_punct("{") {
                self.skip_balanced("{", "}")?;
                continue;
            }
            if self.bump().is_punct(";") {
                return Ok(Member::Field(Span::new(
                    start,
                    self.tokens[self.pos - 1].span.hi,
                )));
            }
        }
        self.err("member declaration")
    }

    fn token_index_at(&self, offset: usize) -> usize {
        self.tokens
            .iter()
            .position(|t| t.span.lo >= offset)
            .unwrap_or(self.tokens.len() - 1)
    }

    fn finish_method(&mut self, start: usize, name: Ident) -> Result<Member, ParseError> {
        self.expect_punct("(")?;
        let mut params = Vec::new();
        if !self.at_punct(")") {
            loop {
                if self.peek().ident() == Some("final") {
                    self.bump();
                }
                let ty = self.type_name()?;
                let pname = self.expect_ident()?;
                params.push((ty, pname));
                if !self.eat_punct(",") {
                    break;
                }
            }
        }
        self.expect_punct(")")?;
        if self.at_kw("throws") {
            self.bump();
            loop {
                self.type_name()?;
                if !self.eat_punct(",") {
                    break;
                }
            }
        }
        if self.eat_punct(";") {
            return Ok(Member::Method(Method {
                name,
                span: Span::new(start, self.tokens[self.pos - 1].span.hi),
                params,
                body: MethodBody::None,
            }));
        }
        if !self.at_punct("{") {
            return self.err("method body");
        }
        // Attempt a full body parse; on any statement-level failure fall back
        // to an opaque body so one exotic method doesn't block the file.
        let body_open = self.pos;
        match self.block() {
            Ok(block) => Ok(Member::Method(Method {
                name,
                span: Span::new(start, block.span.hi),
                params,
                body: MethodBody::Parsed(block),
            })),
            Err(_) => {
                self.pos = body_open;
                let span = self.skip_balanced("{", "}")?;
                Ok(Member::Method(Method {
                    name,
                    span: Span::new(start, span.hi),
                    params,
                    body: MethodBody::Opaque(span),
                }))
            }
        }
    }

    // -- statements ---------------------------------------------------------

    fn block(&mut self) -> Result<Block, ParseError> {
        let open = self.expect_punct("{")?;
        let mut stmts = Vec::new();
        while !self.at_punct("}") {
            if self.at_eof() {
                return self.err("`}`");
            }
            stmts.push(self.statement()?);
        }
        let close = self.expect_punct("}")?;
        Ok(Block {
            span: Span::new(open.span.lo, close.span.hi),
            stmts,
        })
    }

    fn statement(&mut self) -> Result<Stmt, ParseError> {
        let start = self.peek().span.lo;
        if self.at_punct("{") {
            let b = self.block()?;
            return Ok(Stmt {
                span: b.span,
                kind: StmtKind::Block(b),
            });
        }
        if self.at_kw("if") {
            self.bump();
            self.expect_punct("(")?;
            let cond = self.expression()?;
            self.expect_punct(")")?;
            let then_branch = Box::new(self.statement()?);
            let mut end = then_branch.span.hi;
            let else_branch = if self.at_kw("else") {
                self.bump();
                let e = Box::new(self.statement()?);
                end = e.span.hi;
                Some(e)
            } else {
                None
            };
            return Ok(Stmt {
                span: Span::new(start, end),
                kind: StmtKind::If {
                    cond,
                    then_branch,
                    else_branch,
                },
            });
        }
        if self.at_kw("while") {
            self.bump();
            self.expect_punct("(")?;
            let cond = self.expression()?;
            self.expect_punct(")")?;
            let body = Box::new(self.statement()?);
            let end = body.span.hi;
            return Ok(Stmt {
                span: Span::new(start, end),
                kind: StmtKind::While { cond, body },
            });
        }
        if self.at_kw("for") {
            self.bump();
            self.expect_punct("(")?;
            let init = if self.eat_punct(";") {
                None
            } else {
                Some(Box::new(self.decl_or_expr_stmt()?))
            };
            let cond = if self.at_punct(";") {
                None
            } else {
                Some(self.expression()?)
            };
            self.expect_punct(";")?;
            let mut update = Vec::new();
            if !self.at_punct(")") {
                loop {
                    update.push(self.expression()?);
                    if !self.eat_punct(",") {
                        break;
                    }
                }
            }
            self.expect_punct(")")?;
            let body = Box::new(self.statement()?);
            let end = body.span.hi;
            return Ok(Stmt {
                span: Span::new(start, end),
                kind: StmtKind::For {
                    init,
                    cond,
                    update,
                    body,
                },
            });
        }
        if self.at_kw("return") {
            self.bump();
            let expr = if self.at_punct(";") {
                None
            } else {
                Some(self.expression()?)
            };
            let semi = self.expect_punct(";")?;
            return Ok(Stmt {
                span: Span::new(start, semi.span.hi),
                kind: StmtKind::Return(expr),
            });
        }
        if self.at_kw("throw") {
            self.bump();
            let expr = self.expression()?;
            let semi = self.expect_punct(";")?;
            return Ok(Stmt {
                span: Span::new(start, semi.span.hi),
                kind: StmtKind::Throw(expr),
            });
        }
        if self.at_kw("try") {
            self.bump();
            let body = self.block()?;
            let mut catches = Vec::new();
            let mut end = body.span.hi;
            while self.at_kw("catch") {
                self.bump();
                self.expect_punct("(")?;
                let ty = self.type_name()?;
                let name = self.expect_ident()?;
                self.expect_punct(")")?;
                let cbody = self.block()?;
                end = cbody.span.hi;
                catches.push(CatchClause {
                    ty,
                    name,
                    body: cbody,
                });
            }
            let finally = if self.at_kw("finally") {
                self.bump();
                let f = self.block()?;
                end = f.span.hi;
                Some(f)
            } else {
                None
            };
            if catches.is_empty() && finally.is_none() {
                return self.err("`catch` or `finally`");
            }
            return Ok(Stmt {
                span: Span::new(start, end),
                kind: StmtKind::Try {
                    body,
                    catches,
                    finally,
                },
            });
        }
        let stmt = self.decl_or_expr_stmt()?;
        let semi = self.expect_punct(";")?;
        Ok(Stmt {
            span: Span::new(stmt.span.lo, semi.span.hi),
            kind: stmt.kind,
        })
    }

    /// Local declaration or expression, without the trailing `;`.
    fn decl_or_expr_stmt(&mut self) -> Result<Stmt, ParseError> {
        let start = self.peek().span.lo;
        let is_final = self.at_kw("final");
        if is_final || self.decl_ahead() {
            if is_final {
                self.bump();
            }
            let ty = self.type_name()?;
            let name = self.expect_ident()?;
            let init = if self.eat_punct("=") {
                Some(self.expression()?)
            } else {
                None
            };
            let end = init
                .as_ref()
                .map(|e| e.span.hi)
                .unwrap_or(name.span.hi);
            return Ok(Stmt {
                span: Span::new(start, end),
                kind: StmtKind::LocalVarDecl { ty, name, init },
            });
        }
        let expr = self.expression()?;
        Ok(Stmt {
            span: expr.span,
            kind: StmtKind::ExprStmt(expr),
        })
    }

    /// Two identifiers in a row (after a qualified name and array suffixes)
    /// mean a declaration.
    fn decl_ahead(&self) -> bool {
        let mut i = 0;
        if self.peek_at(i).ident().is_none() {
            return false;
        }
        i += 1;
        loop {
            if self.peek_at(i).is_punct(".") && self.peek_at(i + 1).ident().is_some() {
                i += 2;
                continue;
            }
            break;
        }
        while self.peek_at(i).is_punct("[") && self.peek_at(i + 1).is_punct("]") {
            i += 2;
        }
        self.peek_at(i).ident().is_some()
    }

    fn type_ahead(&self) -> bool {
        self.peek().ident().is_some()
    }

    fn type_name(&mut self) -> Result<TypeName, ParseError> {
        let first = self.expect_ident()?;
        let start = first.span.lo;
        let mut text = first.name;
        let mut end = first.span.hi;
        while self.at_punct(".") && self.peek_at(1).ident().is_some() {
            self.bump();
            let seg = self.expect_ident()?;
            text.push('.');
            text.push_str(&seg.name);
            end = seg.span.hi;
        }
        while self.at_punct("[") && self.peek_at(1).is_punct("]") {
            self.bump();
            let close = self.bump();
            text.push_str("[]");
            end = close.span.hi;
        }
        Ok(TypeName {
            text,
            span: Span::new(start, end),
        })
    }

    // -- expressions --------------------------------------------------------

    fn expression(&mut self) -> Result<Expr, ParseError> {
        self.assignment()
    }

    fn assignment(&mut self) -> Result<Expr, ParseError> {
        let lhs = self.binary_or()?;
        if self.at_punct("=") {
            match lhs.kind {
                ExprKind::Identifier(_) | ExprKind::FieldAccess { .. } => {}
                _ => return self.err("assignable expression before `=`"),
            }
            self.bump();
            let rhs = self.assignment()?;
            let span = lhs.span.to(rhs.span);
            return Ok(Expr {
                span,
                kind: ExprKind::Assign {
                    lhs: Box::new(lhs),
                    rhs: Box::new(rhs),
                },
            });
        }
        Ok(lhs)
    }

    fn binary_or(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.binary_and()?;
        while self.at_punct("||") {
            self.bump();
            let rhs = self.binary_and()?;
            lhs = mk_binary(BinOp::Or, lhs, rhs);
        }
        Ok(lhs)
    }

    fn binary_and(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.equality()?;
        while self.at_punct("&&") {
            self.bump();
            let rhs = self.equality()?;
            lhs = mk_binary(BinOp::And, lhs, rhs);
        }
        Ok(lhs)
    }

    fn equality(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.relational()?;
        loop {
            let op = if self.at_punct("==") {
                BinOp::Eq
            } else if self.at_punct("!=") {
                BinOp::Ne
            } else {
                break;
            };
            self.bump();
            let rhs = self.relational()?;
            lhs = mk_binary(op, lhs, rhs);
        }
        Ok(lhs)
    }

    fn relational(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.additive()?;
        loop {
            let op = if self.at_punct("<=") {
                BinOp::Le
            } else if self.at_punct(">=") {
                BinOp::Ge
            } else if self.at_punct("<") {
                BinOp::Lt
            } else if self.at_punct(">") {
                BinOp::Gt
            } else {
                break;
            };
            self.bump();
            let rhs = self.additive()?;
            lhs = mk_binary(op, lhs, rhs);
        }
        Ok(lhs)
    }

    fn additive(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.multiplicative()?;
        loop {
            let op = if self.at_punct("+") {
                BinOp::Add
            } else if self.at_punct("-") {
                BinOp::Sub
            } else {
                break;
            };
            self.bump();
            let rhs = self.multiplicative()?;
            lhs = mk_binary(op, lhs, rhs);
        }
        Ok(lhs)
    }

    fn multiplicative(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let op = if self.at_punct("*") {
                BinOp::Mul
            } else if self.at_punct("/") {
                BinOp::Div
            } else if self.at_punct("%") {
                BinOp::Rem
            } else {
                break;
            };
            self.bump();
            let rhs = self.unary()?;
            lhs = mk_binary(op, lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        let start = self.peek().span.lo;
        if self.at_punct("-") || self.at_punct("!") {
            let op = if self.at_punct("-") {
                UnOp::Neg
            } else {
                UnOp::Not
            };
            self.bump();
            let expr = self.unary()?;
            let span = Span::new(start, expr.span.hi);
            return Ok(Expr {
                span,
                kind: ExprKind::Unary {
                    op,
                    expr: Box::new(expr),
                },
            });
        }
        if self.cast_ahead() {
            self.expect_punct("(")?;
            let ty = self.type_name()?;
            self.expect_punct(")")?;
            let expr = self.unary()?;
            let span = Span::new(start, expr.span.hi);
            return Ok(Expr {
                span,
                kind: ExprKind::Cast {
                    ty,
                    expr: Box::new(expr),
                },
            });
        }
        self.postfix()
    }

    /// `(QualifiedName)` followed by something that can start an operand is a
    /// cast; `(expr) - x` style parses as a parenthesized expression.
    fn cast_ahead(&self) -> bool {
        if !self.at_punct("(") {
            return false;
        }
        let mut i = 1;
        if self.peek_at(i).ident().is_none() {
            return false;
        }
        i += 1;
        loop {
            if self.peek_at(i).is_punct(".") && self.peek_at(i + 1).ident().is_some() {
                i += 2;
                continue;
            }
            break;
        }
        while self.peek_at(i).is_punct("[") && self.peek_at(i + 1).is_punct("]") {
            i += 2;
        }
        if !self.peek_at(i).is_punct(")") {
            return false;
        }
        matches!(
            self.peek_at(i + 1).kind,
            TokenKind::Ident(_) | TokenKind::Int(_) | TokenKind::Str(_) | TokenKind::Char
        ) || self.peek_at(i + 1).is_punct("(")
    }

    fn postfix(&mut self) -> Result<Expr, ParseError> {
        let mut expr = self.primary()?;
        loop {
            if self.at_punct(".") && self.peek_at(1).ident().is_some() {
                self.bump();
                let name = self.expect_ident()?;
                if self.at_punct("(") {
                    let (args, end) = self.arg_list()?;
                    let span = Span::new(expr.span.lo, end);
                    expr = Expr {
                        span,
                        kind: ExprKind::MethodCall {
                            receiver: Some(Box::new(expr)),
                            name,
                            args,
                        },
                    };
                } else {
                    let span = Span::new(expr.span.lo, name.span.hi);
                    expr = Expr {
                        span,
                        kind: ExprKind::FieldAccess {
                            object: Box::new(expr),
                            field: name,
                        },
                    };
                }
                continue;
            }
            break;
        }
        Ok(expr)
    }

    fn arg_list(&mut self) -> Result<(Vec<Expr>, usize), ParseError> {
        self.expect_punct("(")?;
        let mut args = Vec::new();
        if !self.at_punct(")") {
            loop {
                args.push(self.expression()?);
                if !self.eat_punct(",") {
                    break;
                }
            }
        }
        let close = self.expect_punct(")")?;
        Ok((args, close.span.hi))
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let t = self.peek().clone();
        match &t.kind {
            TokenKind::Int(v) => {
                self.bump();
                Ok(Expr {
                    span: t.span,
                    kind: ExprKind::Literal(Lit::Int(*v)),
                })
            }
            TokenKind::Str(s) => {
                self.bump();
                Ok(Expr {
                    span: t.span,
                    kind: ExprKind::Literal(Lit::Str(s.clone())),
                })
            }
            TokenKind::Char => {
                self.bump();
                Ok(Expr {
                    span: t.span,
                    kind: ExprKind::Literal(Lit::Char(t.span.slice(self.text).to_string())),
                })
            }
            TokenKind::Ident(name) => match name.as_str() {
                "true" | "false" => {
                    self.bump();
                    Ok(Expr {
                        span: t.span,
                        kind: ExprKind::Literal(Lit::Bool(name == "true")),
                    })
                }
                "null" => {
                    self.bump();
                    Ok(Expr {
                        span: t.span,
                        kind: ExprKind::Literal(Lit::Null),
                    })
                }
                "new" => {
                    self.bump();
                    let ty = self.type_name()?;
                    let (args, end) = self.arg_list()?;
                    Ok(Expr {
                        span: Span::new(t.span.lo, end),
                        kind: ExprKind::New { ty, args },
                    })
                }
                _ => {
                    let ident = self.expect_ident()?;
                    if self.at_punct("(") {
                        let (args, end) = self.arg_list()?;
                        Ok(Expr {
                            span: Span::new(ident.span.lo, end),
                            kind: ExprKind::MethodCall {
                                receiver: None,
                                name: ident,
                                args,
                            },
                        })
                    } else {
                        Ok(Expr {
                            span: ident.span,
                            kind: ExprKind::Identifier(ident.name),
                        })
                    }
                }
            },
            TokenKind::Punct("(") => {
                self.bump();
                let inner = self.expression()?;
                let close = self.expect_punct(")")?;
                Ok(Expr {
                    span: Span::new(t.span.lo, close.span.hi),
                    kind: ExprKind::Paren(Box::new(inner)),
                })
            }
            _ => self.err("expression"),
        }
    }
}

fn mk_binary(op: BinOp, lhs: Expr, rhs: Expr) -> Expr {
    let span = lhs.span.to(rhs.span);
    Expr {
        span,
        kind: ExprKind::Binary {
            op,
            lhs: Box::new(lhs),
            rhs: Box::new(rhs),
        },
    }
}

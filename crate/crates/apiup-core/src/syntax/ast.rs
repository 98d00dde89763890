//! Tree nodes for the supported Java subset.
//!
//! Nodes carry byte spans into the original text; comments and whitespace are
//! never stored, so printing edited files is always a span splice of the
//! original text rather than a reprint.

use std::fmt::Write as _;
use std::path::PathBuf;

use super::span::{LineIndex, Span};

#[derive(Debug, Clone)]
pub struct SourceUnit {
    pub path: PathBuf,
    pub text: String,
    pub package: Option<Span>,
    pub imports: Vec<Span>,
    pub decls: Vec<TypeDecl>,
    pub lines: LineIndex,
}

impl SourceUnit {
    /// All parsed (non-opaque) methods in declaration order, with their type.
    pub fn methods(&self) -> Vec<(&TypeDecl, &Method)> {
        let mut out = Vec::new();
        for decl in &self.decls {
            decl.collect_methods(&mut out);
        }
        out
    }

    pub fn opaque_methods(&self) -> Vec<&Method> {
        self.methods()
            .into_iter()
            .filter(|(_, m)| matches!(m.body, MethodBody::Opaque(_)))
            .map(|(_, m)| m)
            .collect()
    }

    pub fn opaque_count(&self) -> usize {
        self.opaque_methods().len()
    }

    pub fn line_of(&self, offset: usize) -> usize {
        self.lines.line(offset)
    }

    /// Leading whitespace of the line containing `offset`.
    pub fn indent_at(&self, offset: usize) -> &str {
        let start = self.lines.line_start(offset);
        let line = &self.text[start..];
        let ws_len = line
            .find(|c: char| !matches!(c, ' ' | '\t'))
            .unwrap_or(line.len());
        &self.text[start..start + ws_len.min(offset - start)]
    }
}

#[derive(Debug, Clone)]
pub struct TypeDecl {
    pub name: Ident,
    pub span: Span,
    pub members: Vec<Member>,
}

impl TypeDecl {
    fn collect_methods<'a>(&'a self, out: &mut Vec<(&'a TypeDecl, &'a Method)>) {
        for m in &self.members {
            match m {
                Member::Method(method) => out.push((self, method)),
                Member::Nested(inner) => inner.collect_methods(out),
                _ => {}
            }
        }
    }
}

#[derive(Debug, Clone)]
pub enum Member {
    Method(Method),
    /// Field or other member kept as raw text; never analyzed.
    Field(Span),
    Nested(TypeDecl),
}

#[derive(Debug, Clone)]
pub struct Method {
    pub name: Ident,
    pub span: Span,
    pub params: Vec<(TypeName, Ident)>,
    pub body: MethodBody,
}

#[derive(Debug, Clone)]
pub enum MethodBody {
    Parsed(Block),
    /// Body uses constructs outside the subset; raw text span retained,
    /// method skipped by all analyses.
    Opaque(Span),
    /// Abstract or interface method: `;` instead of a body.
    None,
}

#[derive(Debug, Clone)]
pub struct Block {
    pub span: Span,
    pub stmts: Vec<Stmt>,
}

#[derive(Debug, Clone)]
pub struct Stmt {
    pub span: Span,
    pub kind: StmtKind,
}

#[derive(Debug, Clone)]
pub enum StmtKind {
    Block(Block),
    LocalVarDecl {
        ty: TypeName,
        name: Ident,
        init: Option<Expr>,
    },
    ExprStmt(Expr),
    If {
        cond: Expr,
        then_branch: Box<Stmt>,
        else_branch: Option<Box<Stmt>>,
    },
    While {
        cond: Expr,
        body: Box<Stmt>,
    },
    For {
        init: Option<Box<Stmt>>,
        cond: Option<Expr>,
        update: Vec<Expr>,
        body: Box<Stmt>,
    },
    Return(Option<Expr>),
    Throw(Expr),
    Try {
        body: Block,
        catches: Vec<CatchClause>,
        finally: Option<Block>,
    },
}

#[derive(Debug, Clone)]
pub struct CatchClause {
    pub ty: TypeName,
    pub name: Ident,
    pub body: Block,
}

#[derive(Debug, Clone)]
pub struct Expr {
    pub span: Span,
    pub kind: ExprKind,
}

#[derive(Debug, Clone)]
pub enum ExprKind {
    MethodCall {
        receiver: Option<Box<Expr>>,
        name: Ident,
        args: Vec<Expr>,
    },
    FieldAccess {
        object: Box<Expr>,
        field: Ident,
    },
    Identifier(String),
    Literal(Lit),
    Binary {
        op: BinOp,
        lhs: Box<Expr>,
        rhs: Box<Expr>,
    },
    Assign {
        lhs: Box<Expr>,
        rhs: Box<Expr>,
    },
    New {
        ty: TypeName,
        args: Vec<Expr>,
    },
    Cast {
        ty: TypeName,
        expr: Box<Expr>,
    },
    Unary {
        op: UnOp,
        expr: Box<Expr>,
    },
    Paren(Box<Expr>),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Lit {
    Int(i64),
    Str(String),
    Bool(bool),
    Null,
    /// Char literal, value irrelevant to any analysis here.
    Char(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Rem,
    Lt,
    Le,
    Gt,
    Ge,
    Eq,
    Ne,
    And,
    Or,
}

impl BinOp {
    pub fn as_str(&self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
            BinOp::Div => "/",
            BinOp::Rem => "%",
            BinOp::Lt => "<",
            BinOp::Le => "<=",
            BinOp::Gt => ">",
            BinOp::Ge => ">=",
            BinOp::Eq => "==",
            BinOp::Ne => "!=",
            BinOp::And => "&&",
            BinOp::Or => "||",
        }
    }

    pub fn is_comparison(&self) -> bool {
        matches!(
            self,
            BinOp::Lt | BinOp::Le | BinOp::Gt | BinOp::Ge | BinOp::Eq | BinOp::Ne
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnOp {
    Neg,
    Not,
}

#[derive(Debug, Clone)]
pub struct Ident {
    pub name: String,
    pub span: Span,
}

/// Type name as written: dotted segments plus optional `[]` suffixes.
#[derive(Debug, Clone)]
pub struct TypeName {
    pub text: String,
    pub span: Span,
}

impl TypeName {
    /// Last dotted segment, without array suffixes: `android.widget.TimePicker` -> `TimePicker`.
    pub fn simple_name(&self) -> &str {
        let base = self.text.trim_end_matches("[]");
        base.rsplit('.').next().unwrap_or(base)
    }
}

/// Dotted-name view of an expression: `android.os.Build.VERSION.SDK_INT` as
/// its segments, when the expression is a pure identifier/field-access chain.
pub fn dotted_path(expr: &Expr) -> Option<Vec<&str>> {
    match &expr.kind {
        ExprKind::Identifier(name) => Some(vec![name.as_str()]),
        ExprKind::FieldAccess { object, field } => {
            let mut path = dotted_path(object)?;
            path.push(&field.name);
            Some(path)
        }
        _ => None,
    }
}

/// Strip parentheses, which never affect matching or evaluation here.
pub fn unparen(expr: &Expr) -> &Expr {
    match &expr.kind {
        ExprKind::Paren(inner) => unparen(inner),
        _ => expr,
    }
}

// ---------------------------------------------------------------------------
// canonical printing — whitespace-normalized, used for structural comparison
// ---------------------------------------------------------------------------

pub fn canon_expr(expr: &Expr) -> String {
    let mut s = String::new();
    write_expr(&mut s, expr);
    s
}

pub fn canon_stmt(stmt: &Stmt) -> String {
    let mut s = String::new();
    write_stmt(&mut s, stmt);
    s
}

fn write_expr(out: &mut String, expr: &Expr) {
    match &expr.kind {
        ExprKind::MethodCall {
            receiver,
            name,
            args,
        } => {
            if let Some(r) = receiver {
                write_expr(out, r);
                out.push('.');
            }
            out.push_str(&name.name);
            out.push('(');
            for (i, a) in args.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                write_expr(out, a);
            }
            out.push(')');
        }
        ExprKind::FieldAccess { object, field } => {
            write_expr(out, object);
            out.push('.');
            out.push_str(&field.name);
        }
        ExprKind::Identifier(name) => out.push_str(name),
        ExprKind::Literal(lit) => match lit {
            Lit::Int(v) => {
                let _ = write!(out, "{v}");
            }
            Lit::Str(s) => {
                let _ = write!(out, "\"{s}\"");
            }
            Lit::Bool(b) => {
                let _ = write!(out, "{b}");
            }
            Lit::Null => out.push_str("null"),
            Lit::Char(c) => out.push_str(c),
        },
        ExprKind::Binary { op, lhs, rhs } => {
            write_expr(out, lhs);
            let _ = write!(out, " {} ", op.as_str());
            write_expr(out, rhs);
        }
        ExprKind::Assign { lhs, rhs } => {
            write_expr(out, lhs);
            out.push_str(" = ");
            write_expr(out, rhs);
        }
        ExprKind::New { ty, args } => {
            let _ = write!(out, "new {}(", ty.text);
            for (i, a) in args.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                write_expr(out, a);
            }
            out.push(')');
        }
        ExprKind::Cast { ty, expr } => {
            let _ = write!(out, "({}) ", ty.text);
            write_expr(out, expr);
        }
        ExprKind::Unary { op, expr } => {
            out.push(match op {
                UnOp::Neg => '-',
                UnOp::Not => '!',
            });
            write_expr(out, expr);
        }
        ExprKind::Paren(inner) => {
            out.push('(');
            write_expr(out, inner);
            out.push(')');
        }
    }
}

fn write_stmt(out: &mut String, stmt: &Stmt) {
    match &stmt.kind {
        StmtKind::Block(b) => {
            out.push_str("{ ");
            for s in &b.stmts {
                write_stmt(out, s);
                out.push(' ');
            }
            out.push('}');
        }
        StmtKind::LocalVarDecl { ty, name, init } => {
            let _ = write!(out, "{} {}", ty.text, name.name);
            if let Some(e) = init {
                out.push_str(" = ");
                write_expr(out, e);
            }
            out.push(';');
        }
        StmtKind::ExprStmt(e) => {
            write_expr(out, e);
            out.push(';');
        }
        StmtKind::If {
            cond,
            then_branch,
            else_branch,
        } => {
            out.push_str("if (");
            write_expr(out, cond);
            out.push_str(") ");
            write_stmt(out, then_branch);
            if let Some(e) = else_branch {
                out.push_str(" else ");
                write_stmt(out, e);
            }
        }
        StmtKind::While { cond, body } => {
            out.push_str("while (");
            write_expr(out, cond);
            out.push_str(") ");
            write_stmt(out, body);
        }
        StmtKind::For {
            init,
            cond,
            update,
            body,
        } => {
            out.push_str("for (");
            if let Some(i) = init {
                write_stmt(out, i);
            } else {
                out.push(';');
            }
            out.push(' ');
            if let Some(c) = cond {
                write_expr(out, c);
            }
            out.push_str("; ");
            for (i, u) in update.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                write_expr(out, u);
            }
            out.push_str(") ");
            write_stmt(out, body);
        }
        StmtKind::Return(e) => {
            out.push_str("return");
            if let Some(e) = e {
                out.push(' ');
                write_expr(out, e);
            }
            out.push(';');
        }
        StmtKind::Throw(e) => {
            out.push_str("throw ");
            write_expr(out, e);
            out.push(';');
        }
        StmtKind::Try {
            body,
            catches,
            finally,
        } => {
            out.push_str("try ");
            write_stmt(
                out,
                &Stmt {
                    span: body.span,
                    kind: StmtKind::Block(body.clone()),
                },
            );
            for c in catches {
                let _ = write!(out, " catch ({} {}) ", c.ty.text, c.name.name);
                write_stmt(
                    out,
                    &Stmt {
                        span: c.body.span,
                        kind: StmtKind::Block(c.body.clone()),
                    },
                );
            }
            if let Some(f) = finally {
                out.push_str(" finally ");
                write_stmt(
                    out,
                    &Stmt {
                        span: f.span,
                        kind: StmtKind::Block(f.clone()),
                    },
                );
            }
        }
    }
}

// ---------------------------------------------------------------------------
// walkers
// ---------------------------------------------------------------------------

/// Visit every statement in `block` in preorder, descending into nested
/// blocks, branches, and loop bodies.
pub fn walk_stmts<'a>(block: &'a Block, f: &mut dyn FnMut(&'a Stmt)) {
    for stmt in &block.stmts {
        walk_stmt(stmt, f);
    }
}

pub fn walk_stmt<'a>(stmt: &'a Stmt, f: &mut dyn FnMut(&'a Stmt)) {
    f(stmt);
    match &stmt.kind {
        StmtKind::Block(b) => walk_stmts(b, f),
        StmtKind::If {
            then_branch,
            else_branch,
            ..
        } => {
            walk_stmt(then_branch, f);
            if let Some(e) = else_branch {
                walk_stmt(e, f);
            }
        }
        StmtKind::While { body, .. } => walk_stmt(body, f),
        StmtKind::For { init, body, .. } => {
            if let Some(i) = init {
                walk_stmt(i, f);
            }
            walk_stmt(body, f);
        }
        StmtKind::Try {
            body,
            catches,
            finally,
        } => {
            walk_stmts(body, f);
            for c in catches {
                walk_stmts(&c.body, f);
            }
            if let Some(fin) = finally {
                walk_stmts(fin, f);
            }
        }
        _ => {}
    }
}

/// Visit every expression under `stmt` (conditions, initializers, operands).
pub fn walk_exprs_in_stmt<'a>(stmt: &'a Stmt, f: &mut dyn FnMut(&'a Expr)) {
    let mut on_stmt = |s: &'a Stmt| match &s.kind {
        StmtKind::LocalVarDecl { init: Some(e), .. } => walk_expr(e, f),
        StmtKind::ExprStmt(e) => walk_expr(e, f),
        StmtKind::If { cond, .. } => walk_expr(cond, f),
        StmtKind::While { cond, .. } => walk_expr(cond, f),
        StmtKind::For { cond, update, .. } => {
            if let Some(c) = cond {
                walk_expr(c, f);
            }
            for u in update {
                walk_expr(u, f);
            }
        }
        StmtKind::Return(Some(e)) => walk_expr(e, f),
        StmtKind::Throw(e) => walk_expr(e, f),
        _ => {}
    };
    walk_stmt(stmt, &mut on_stmt);
}

pub fn walk_expr<'a>(expr: &'a Expr, f: &mut dyn FnMut(&'a Expr)) {
    f(expr);
    match &expr.kind {
        ExprKind::MethodCall { receiver, args, .. } => {
            if let Some(r) = receiver {
                walk_expr(r, f);
            }
            for a in args {
                walk_expr(a, f);
            }
        }
        ExprKind::FieldAccess { object, .. } => walk_expr(object, f),
        ExprKind::Binary { lhs, rhs, .. } => {
            walk_expr(lhs, f);
            walk_expr(rhs, f);
        }
        ExprKind::Assign { lhs, rhs } => {
            walk_expr(lhs, f);
            walk_expr(rhs, f);
        }
        ExprKind::New { args, .. } => {
            for a in args {
                walk_expr(a, f);
            }
        }
        ExprKind::Cast { expr, .. } => walk_expr(expr, f),
        ExprKind::Unary { expr, .. } => walk_expr(expr, f),
        ExprKind::Paren(inner) => walk_expr(inner, f),
        _ => {}
    }
}

/// All identifier-ish names appearing in a method: parameter names, declared
/// locals, and identifier expressions. Used for collision-free temp naming.
pub fn method_identifiers(method: &Method) -> std::collections::HashSet<String> {
    let mut names = std::collections::HashSet::new();
    for (_, p) in &method.params {
        names.insert(p.name.clone());
    }
    if let MethodBody::Parsed(block) = &method.body {
        let mut on_stmt = |s: &Stmt| {
            if let StmtKind::LocalVarDecl { name, .. } = &s.kind {
                names.insert(name.name.clone());
            }
        };
        walk_stmts(block, &mut on_stmt);
        for stmt in &block.stmts {
            walk_exprs_in_stmt(stmt, &mut |e| {
                if let ExprKind::Identifier(n) = &e.kind {
                    names.insert(n.clone());
                }
            });
        }
    }
    names
}

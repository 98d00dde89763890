use super::ast::*;
use super::span::Span;
use crate::mapping::{matches_deprecated, ApiMapping};

/// How a matched call sits in its enclosing statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CallRole {
    /// The call is the whole statement: `recv.m(a);`
    StandaloneStmt,
    /// The call is the whole right-hand side of an assignment or the whole
    /// initializer of a local declaration.
    AssignmentRhs,
    /// Anything else: condition operand, argument, compound expression, ...
    Subexpression,
}

/// One occurrence of the deprecated API in a source unit. Spans refer to the
/// unit the site was computed from; any edit invalidates them.
#[derive(Debug, Clone)]
pub struct CallSite {
    pub method_span: Span,
    pub method_name: String,
    /// Statement immediately containing the call.
    pub stmt_span: Span,
    /// Nearest ancestor statement that is a direct child of a statement list;
    /// inserting new statements is only possible right before this one.
    pub anchor_span: Span,
    /// True when the call's own statement is the insertion anchor.
    pub anchor_is_immediate: bool,
    pub call_span: Span,
    pub receiver_span: Option<Span>,
    pub receiver_ident: Option<String>,
    pub arg_spans: Vec<Span>,
    pub arg_idents: Vec<Option<String>>,
    /// For AssignmentRhs via `x = call();`: the assigned identifier.
    pub assign_lhs_ident: Option<String>,
    /// True when the site is `T x = call();` rather than `x = call();`.
    pub is_decl_init: bool,
    pub role: CallRole,
    pub line: usize,
}

/// Find all calls matching the mapping's deprecated method (name + arity),
/// in source order. Opaque-body methods are skipped.
pub fn find_calls(unit: &SourceUnit, mapping: &ApiMapping) -> Vec<CallSite> {
    let mut out = Vec::new();
    for (_, method) in unit.methods() {
        if let MethodBody::Parsed(block) = &method.body {
            let mut finder = Finder {
                unit,
                mapping,
                method,
                out: &mut out,
            };
            finder.visit_block(block);
        }
    }
    out.sort_by_key(|s| s.call_span.lo);
    out
}

struct Finder<'a> {
    unit: &'a SourceUnit,
    mapping: &'a ApiMapping,
    method: &'a Method,
    out: &'a mut Vec<CallSite>,
}

impl<'a> Finder<'a> {
    fn visit_block(&mut self, block: &'a Block) {
        for stmt in &block.stmts {
            self.visit_stmt(stmt, stmt);
        }
    }

    fn visit_stmt(&mut self, stmt: &'a Stmt, anchor: &'a Stmt) {
        for root in own_exprs(stmt) {
            self.scan_expr(root, stmt, anchor);
        }
        match &stmt.kind {
            StmtKind::Block(b) => self.visit_block(b),
            StmtKind::If {
                then_branch,
                else_branch,
                ..
            } => {
                self.visit_stmt(then_branch, anchor);
                if let Some(e) = else_branch {
                    self.visit_stmt(e, anchor);
                }
            }
            StmtKind::While { body, .. } => self.visit_stmt(body, anchor),
            StmtKind::For { init, body, .. } => {
                if let Some(i) = init {
                    self.visit_stmt(i, anchor);
                }
                self.visit_stmt(body, anchor);
            }
            StmtKind::Try {
                body,
                catches,
                finally,
            } => {
                self.visit_block(body);
                for c in catches {
                    self.visit_block(&c.body);
                }
                if let Some(f) = finally {
                    self.visit_block(f);
                }
            }
            _ => {}
        }
    }

    fn scan_expr(&mut self, root: &'a Expr, immediate: &'a Stmt, anchor: &'a Stmt) {
        let mut calls = Vec::new();
        walk_expr(root, &mut |e| {
            if matches_deprecated(self.mapping, e) {
                calls.push(e);
            }
        });
        for call in calls {
            self.record(call, immediate, anchor);
        }
    }

    fn record(&mut self, call: &'a Expr, immediate: &'a Stmt, anchor: &'a Stmt) {
        let (receiver, args) = match &call.kind {
            ExprKind::MethodCall { receiver, args, .. } => (receiver, args),
            _ => unreachable!(),
        };
        let (role, assign_lhs_ident, is_decl_init) = classify(immediate, call);
        let ident_of = |e: &Expr| match &unparen(e).kind {
            ExprKind::Identifier(n) => Some(n.clone()),
            _ => None,
        };
        self.out.push(CallSite {
            method_span: self.method.span,
            method_name: self.method.name.name.clone(),
            stmt_span: immediate.span,
            anchor_span: anchor.span,
            anchor_is_immediate: std::ptr::eq(immediate, anchor),
            call_span: call.span,
            receiver_span: receiver.as_ref().map(|r| r.span),
            receiver_ident: receiver.as_ref().and_then(|r| ident_of(r)),
            arg_spans: args.iter().map(|a| a.span).collect(),
            arg_idents: args.iter().map(|a| ident_of(a)).collect(),
            assign_lhs_ident,
            is_decl_init,
            role,
            line: self.unit.line_of(call.span.lo),
        });
    }
}

fn classify(immediate: &Stmt, call: &Expr) -> (CallRole, Option<String>, bool) {
    match &immediate.kind {
        StmtKind::ExprStmt(e) => {
            if std::ptr::eq(unparen(e), call) {
                return (CallRole::StandaloneStmt, None, false);
            }
            if let ExprKind::Assign { lhs, rhs } = &e.kind {
                if std::ptr::eq(unparen(rhs), call) {
                    let lhs_name = match &unparen(lhs).kind {
                        ExprKind::Identifier(n) => Some(n.clone()),
                        _ => None,
                    };
                    return (CallRole::AssignmentRhs, lhs_name, false);
                }
            }
        }
        StmtKind::LocalVarDecl { init: Some(e), .. } => {
            if std::ptr::eq(unparen(e), call) {
                return (CallRole::AssignmentRhs, None, true);
            }
        }
        _ => {}
    }
    (CallRole::Subexpression, None, false)
}

/// Expression roots owned directly by this statement (not by sub-statements).
fn own_exprs(stmt: &Stmt) -> Vec<&Expr> {
    match &stmt.kind {
        StmtKind::LocalVarDecl { init, .. } => init.iter().collect(),
        StmtKind::ExprStmt(e) => vec![e],
        StmtKind::If { cond, .. } => vec![cond],
        StmtKind::While { cond, .. } => vec![cond],
        StmtKind::For { cond, update, .. } => {
            cond.iter().chain(update.iter()).collect()
        }
        StmtKind::Return(e) => e.iter().collect(),
        StmtKind::Throw(e) => vec![e],
        _ => vec![],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mapping::parse_mapping;
    use crate::syntax::parser::parse_unit;
    use std::path::Path;

    fn mapping() -> ApiMapping {
        parse_mapping(
            r#"{"deprecatedClass":"android.widget.TimePicker","deprecatedMethod":"getCurrentHour",
                "paramTypes":[],"returnType":"int","replacementMethod":"getHour",
                "replacementParamTypes":[],"sinceVersion":"M"}"#,
        )
        .unwrap()
    }

    fn unit(body: &str) -> SourceUnit {
        let text = format!("class A {{\n    void m() {{\n{body}\n    }}\n}}\n");
        parse_unit(&text, Path::new("A.java")).unwrap()
    }

    #[test]
    fn condition_call_is_subexpression() {
        let u = unit("        if (timePicker.getCurrentHour() > 11)\n            itsNoon();");
        let sites = find_calls(&u, &mapping());
        assert_eq!(sites.len(), 1);
        assert_eq!(sites[0].role, CallRole::Subexpression);
        assert!(sites[0].anchor_is_immediate);
    }

    #[test]
    fn initializer_call_is_assignment_rhs() {
        let u = unit("        int currentHour = timePicker.getCurrentHour();\n        if (10 < currentHour)\n            itsNoon();");
        let sites = find_calls(&u, &mapping());
        assert_eq!(sites.len(), 1);
        assert_eq!(sites[0].role, CallRole::AssignmentRhs);
        assert!(sites[0].is_decl_init);
    }

    #[test]
    fn no_usage_yields_empty() {
        let u = unit("        int x = 1;");
        assert!(find_calls(&u, &mapping()).is_empty());
    }

    #[test]
    fn standalone_and_assignment_roles() {
        let u = unit(
            "        picker.getCurrentHour();\n        hour = picker.getCurrentHour();",
        );
        let sites = find_calls(&u, &mapping());
        assert_eq!(sites.len(), 2);
        assert_eq!(sites[0].role, CallRole::StandaloneStmt);
        assert_eq!(sites[1].role, CallRole::AssignmentRhs);
        assert_eq!(sites[1].assign_lhs_ident.as_deref(), Some("hour"));
    }

    #[test]
    fn braceless_branch_call_is_not_insertable() {
        let u = unit("        if (ok) hour = picker.getCurrentHour();");
        let sites = find_calls(&u, &mapping());
        assert_eq!(sites.len(), 1);
        assert_eq!(sites[0].role, CallRole::AssignmentRhs);
        assert!(!sites[0].anchor_is_immediate);
    }

    #[test]
    fn source_order_is_stable_under_formatting() {
        let compact = unit("        a.getCurrentHour();b.getCurrentHour();");
        let spaced = unit(
            "        a.getCurrentHour(); // first\n\n        b.getCurrentHour();  /* second */",
        );
        let rc: Vec<_> = find_calls(&compact, &mapping())
            .iter()
            .map(|s| s.receiver_ident.clone())
            .collect();
        let rs: Vec<_> = find_calls(&spaced, &mapping())
            .iter()
            .map(|s| s.receiver_ident.clone())
            .collect();
        assert_eq!(rc, rs);
    }
}

//! Parsing, navigation, and span-preserving printing for the Java subset the
//! tool understands.

pub mod ast;
pub mod calls;
pub mod lexer;
pub mod parser;
pub mod span;
pub mod splice;

pub use ast::SourceUnit;
pub use calls::{find_calls, CallRole, CallSite};
pub use parser::{parse_expression, parse_statement, parse_statements, parse_unit};
pub use span::Span;
pub use splice::{splice, Edit};

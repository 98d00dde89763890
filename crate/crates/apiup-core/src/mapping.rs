//! Per-API configuration: which method is deprecated, what replaces it, and
//! from which Android version the replacement is available.

use std::fs;
use std::path::Path;

use serde::Deserialize;

use crate::error::MappingError;
use crate::syntax::ast::{Expr, ExprKind};

/// Comparison operator used when emitting version guards. Always `>=`;
/// reversed guards are recognized when reading examples but never emitted.
pub const GUARD_OP: &str = ">=";

#[derive(Debug, Clone, PartialEq)]
pub struct ApiMapping {
    pub deprecated_class: String,
    pub deprecated_method: String,
    pub param_types: Vec<String>,
    pub return_type: String,
    pub replacement_method: String,
    pub replacement_param_types: Vec<String>,
    pub since_version: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMapping {
    #[serde(rename = "deprecatedClass")]
    deprecated_class: Option<String>,
    #[serde(rename = "deprecatedMethod")]
    deprecated_method: Option<String>,
    #[serde(rename = "paramTypes")]
    param_types: Option<Vec<String>>,
    #[serde(rename = "returnType")]
    return_type: Option<String>,
    #[serde(rename = "replacementMethod")]
    replacement_method: Option<String>,
    #[serde(rename = "replacementParamTypes")]
    replacement_param_types: Option<Vec<String>>,
    #[serde(rename = "sinceVersion")]
    since_version: Option<String>,
}

pub fn load_mapping(path: &Path) -> Result<ApiMapping, MappingError> {
    let text = fs::read_to_string(path)
        .map_err(|e| MappingError::new(path.display().to_string(), format!("unreadable: {e}")))?;
    parse_mapping(&text)
}

pub fn parse_mapping(text: &str) -> Result<ApiMapping, MappingError> {
    let raw: RawMapping = serde_json::from_str(text).map_err(|e| {
        let msg = e.to_string();
        // surface the offending key for unknown-field errors
        let field = msg
            .strip_prefix("unknown field `")
            .and_then(|rest| rest.split('`').next())
            .unwrap_or("")
            .to_string();
        MappingError::new(field, msg)
    })?;

    fn required(field: &str, v: Option<String>) -> Result<String, MappingError> {
        match v {
            Some(s) if !s.trim().is_empty() => Ok(s),
            Some(_) => Err(MappingError::new(field, "must not be empty")),
            None => Err(MappingError::new(field, "required")),
        }
    }

    let mapping = ApiMapping {
        deprecated_class: required("deprecatedClass", raw.deprecated_class)?,
        deprecated_method: required("deprecatedMethod", raw.deprecated_method)?,
        param_types: raw
            .param_types
            .ok_or_else(|| MappingError::new("paramTypes", "required"))?,
        return_type: required("returnType", raw.return_type)?,
        replacement_method: required("replacementMethod", raw.replacement_method)?,
        replacement_param_types: raw
            .replacement_param_types
            .ok_or_else(|| MappingError::new("replacementParamTypes", "required"))?,
        since_version: required("sinceVersion", raw.since_version)?,
    };
    for (i, t) in mapping.param_types.iter().enumerate() {
        if t.trim().is_empty() {
            return Err(MappingError::new(
                format!("paramTypes[{i}]"),
                "must not be empty",
            ));
        }
    }
    for (i, t) in mapping.replacement_param_types.iter().enumerate() {
        if t.trim().is_empty() {
            return Err(MappingError::new(
                format!("replacementParamTypes[{i}]"),
                "must not be empty",
            ));
        }
    }
    Ok(mapping)
}

impl ApiMapping {
    pub fn returns_value(&self) -> bool {
        self.return_type != "void"
    }

    /// Simple (unqualified) name of the deprecated class.
    pub fn class_simple_name(&self) -> &str {
        self.deprecated_class
            .rsplit('.')
            .next()
            .unwrap_or(&self.deprecated_class)
    }
}

/// Name-and-arity test against the deprecated method. No type resolution is
/// attempted, so overloads sharing an arity are matched; documented limitation.
pub fn matches_deprecated(mapping: &ApiMapping, call: &Expr) -> bool {
    match &call.kind {
        ExprKind::MethodCall { name, args, .. } => {
            name.name == mapping.deprecated_method && args.len() == mapping.param_types.len()
        }
        _ => false,
    }
}

/// Same test for the replacement side. Needed because a replacement may share
/// the deprecated method's name and differ only in arity (setTextAppearance).
pub fn matches_replacement(mapping: &ApiMapping, call: &Expr) -> bool {
    match &call.kind {
        ExprKind::MethodCall { name, args, .. } => {
            name.name == mapping.replacement_method
                && args.len() == mapping.replacement_param_types.len()
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parser::parse_expression;

    fn get_current_hour() -> ApiMapping {
        parse_mapping(
            r#"{"deprecatedClass":"android.widget.TimePicker","deprecatedMethod":"getCurrentHour",
                "paramTypes":[],"returnType":"int","replacementMethod":"getHour",
                "replacementParamTypes":[],"sinceVersion":"M"}"#,
        )
        .unwrap()
    }

    #[test]
    fn loads_complete_mapping() {
        let m = get_current_hour();
        assert_eq!(m.deprecated_method, "getCurrentHour");
        assert_eq!(m.replacement_method, "getHour");
        assert_eq!(m.since_version, "M");
        assert!(m.returns_value());
        assert_eq!(m.class_simple_name(), "TimePicker");
    }

    #[test]
    fn missing_replacement_is_an_error() {
        let err = parse_mapping(
            r#"{"deprecatedClass":"a.B","deprecatedMethod":"m","paramTypes":[],
                "returnType":"void","replacementParamTypes":[],"sinceVersion":"M"}"#,
        )
        .unwrap_err();
        assert_eq!(err.field, "replacementMethod");
        assert_eq!(err.reason, "required");
    }

    #[test]
    fn unknown_key_is_rejected() {
        let err = parse_mapping(
            r#"{"deprecatedClass":"a.B","deprecatedMethod":"m","paramTypes":[],
                "returnType":"void","replacementMethod":"n","replacementParamTypes":[],
                "sinceVersion":"M","extra":1}"#,
        )
        .unwrap_err();
        assert_eq!(err.field, "extra");
    }

    #[test]
    fn void_mapping_with_params() {
        let m = parse_mapping(
            r#"{"deprecatedClass":"android.widget.TextView","deprecatedMethod":"setTextAppearance",
                "paramTypes":["Context","int"],"returnType":"void",
                "replacementMethod":"setTextAppearance","replacementParamTypes":["int"],
                "sinceVersion":"M"}"#,
        )
        .unwrap();
        assert!(!m.returns_value());
        let call = parse_expression("tv.setTextAppearance(ctx, style)").unwrap();
        assert!(matches_deprecated(&m, &call));
        let one_arg = parse_expression("tv.setTextAppearance(style)").unwrap();
        assert!(!matches_deprecated(&m, &one_arg));
        assert!(matches_replacement(&m, &one_arg));
    }

    #[test]
    fn arity_mismatch_is_not_deprecated() {
        let m = get_current_hour();
        let ok = parse_expression("picker.getCurrentHour()").unwrap();
        let extra = parse_expression("picker.getCurrentHour(1)").unwrap();
        assert!(matches_deprecated(&m, &ok));
        assert!(!matches_deprecated(&m, &extra));
    }

    #[test]
    fn matching_ignores_receiver_and_arg_shapes() {
        // name+arity only, regardless of how receiver or arguments look
        let m = get_current_hour();
        for recv in ["a", "a.b.c", "f()", "(TimePicker) x", "new T()"] {
            let call = parse_expression(&format!("{recv}.getCurrentHour()")).unwrap();
            assert!(matches_deprecated(&m, &call), "receiver {recv}");
        }
    }
}

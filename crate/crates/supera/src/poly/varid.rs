//! Interned polynomial variables.
//!
//! Six variables are built in, ordered by precedence `a > q > t > x > y > z`.
//! Further variables (`alpha`, `beta`, `Q`, ...) can be interned at run time
//! and sort after the built-ins, in registration order. Half-integer
//! exponents are permitted on `a`, `q`, `t` only.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

/// Identifier of an interned variable. Smaller id = higher precedence in the
/// monomial order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VarId(u32);

struct Registry {
    names: Vec<String>,
    by_name: HashMap<String, u32>,
}

fn registry() -> &'static Mutex<Registry> {
    static REG: OnceLock<Mutex<Registry>> = OnceLock::new();
    REG.get_or_init(|| {
        let names: Vec<String> = ["a", "q", "t", "x", "y", "z"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let by_name = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i as u32))
            .collect();
        Mutex::new(Registry { names, by_name })
    })
}

impl VarId {
    pub const A: VarId = VarId(0);
    pub const Q: VarId = VarId(1);
    pub const T: VarId = VarId(2);
    pub const X: VarId = VarId(3);
    pub const Y: VarId = VarId(4);
    pub const Z: VarId = VarId(5);

    /// Look up or register a variable by name. Names must be identifiers
    /// (`[A-Za-z][A-Za-z0-9_]*`) and `i` is reserved for the imaginary unit.
    pub fn intern(name: &str) -> VarId {
        assert!(Self::valid_name(name), "invalid variable name {name:?}");
        let mut reg = registry().lock().unwrap();
        if let Some(&id) = reg.by_name.get(name) {
            return VarId(id);
        }
        let id = reg.names.len() as u32;
        reg.names.push(name.to_string());
        reg.by_name.insert(name.to_string(), id);
        VarId(id)
    }

    /// Like [`VarId::intern`] but never registers a new variable.
    pub fn lookup(name: &str) -> Option<VarId> {
        let reg = registry().lock().unwrap();
        reg.by_name.get(name).copied().map(VarId)
    }

    pub fn valid_name(name: &str) -> bool {
        if name == "i" || name.is_empty() {
            return false;
        }
        let mut chars = name.chars();
        chars.next().is_some_and(|c| c.is_ascii_alphabetic())
            && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
    }

    pub fn name(&self) -> String {
        registry().lock().unwrap().names[self.0 as usize].clone()
    }

    /// Half-integer exponents are allowed on `a`, `q`, `t` only.
    pub fn half_allowed(&self) -> bool {
        self.0 <= 2
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_order() {
        assert!(VarId::A < VarId::Q && VarId::Q < VarId::T);
        assert!(VarId::T < VarId::X && VarId::X < VarId::Y && VarId::Y < VarId::Z);
        assert_eq!(VarId::intern("a"), VarId::A);
        assert_eq!(VarId::lookup("y"), Some(VarId::Y));
    }

    #[test]
    fn interning_is_stable() {
        let alpha = VarId::intern("alpha");
        assert_eq!(VarId::intern("alpha"), alpha);
        assert!(alpha > VarId::Z);
        assert!(!alpha.half_allowed());
        assert_eq!(alpha.name(), "alpha");
    }

    #[test]
    fn reserved_names() {
        assert!(!VarId::valid_name("i"));
        assert!(!VarId::valid_name("2x"));
        assert!(VarId::valid_name("z2"));
    }
}

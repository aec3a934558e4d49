//! `idealkit run <file> <command> [args]`.

use idealkit::certify::{
    buchsbaum_eisenbud, is_regular_sequence, syzygetic_obstruction, verify_complex, ComplexData, GradeCertificate,
};
use idealkit::ideal::{check_linear_type, kernel_of_map, rees_ideal};
use idealkit::{Colength, Ideal, Polynomial, Ring};

use crate::error::CliError;
use crate::input::SessionInput;
use crate::report::CommandOutput;

pub const COMMANDS: [&str; 15] = [
    "gb",
    "nf",
    "colon",
    "intersect",
    "eliminate",
    "kernel",
    "rees",
    "lineartype",
    "dim",
    "colength",
    "minors",
    "regseq",
    "complex",
    "be",
    "syzygetic",
];

fn usage(text: &str) -> CliError {
    CliError::Usage(text.to_string())
}

fn arity<'a>(args: &'a [String], n: usize, text: &str) -> Result<&'a [String], CliError> {
    if args.len() == n {
        Ok(args)
    } else {
        Err(usage(text))
    }
}

fn poly_lines(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

fn basis_lines(i: &Ideal) -> Vec<String> {
    poly_lines(i.gb().basis())
}

/// Names for the source variables of a kernel computation.
fn kernel_names(n: usize) -> Vec<String> {
    const SHORT: [&str; 6] = ["x", "y", "z", "w", "u", "v"];
    if n <= SHORT.len() {
        SHORT[..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

pub fn run_command(s: &SessionInput, command: &str, args: &[String]) -> Result<CommandOutput, CliError> {
    let out = match command {
        "gb" => {
            let a = arity(args, 1, "gb <ideal>")?;
            CommandOutput::lines(basis_lines(&s.ideal(&a[0])?))
        }
        "nf" => {
            let a = arity(args, 2, "nf <poly> <ideal>")?;
            let f = s.expr(&a[0])?;
            CommandOutput::lines(vec![s.ideal(&a[1])?.normal_form(&f)?.to_string()])
        }
        "colon" => {
            let a = arity(args, 2, "colon <ideal> <poly|ideal>")?;
            let i = s.ideal(&a[0])?;
            let c = match s.ideal(&a[1]) {
                Ok(j) => i.colon_ideal(&j)?,
                Err(_) => i.colon(&s.expr(&a[1])?)?,
            };
            CommandOutput::lines(basis_lines(&c))
        }
        "intersect" => {
            let a = arity(args, 2, "intersect <ideal> <ideal>")?;
            let c = s.ideal(&a[0])?.intersect(&s.ideal(&a[1])?)?;
            CommandOutput::lines(basis_lines(&c))
        }
        "eliminate" => {
            if args.len() < 2 {
                return Err(usage("eliminate <ideal> <var>..."));
            }
            let names: Vec<&str> = args[1..].iter().map(String::as_str).collect();
            let c = s.ideal(&args[0])?.eliminate_named(&names)?;
            CommandOutput::lines(basis_lines(&c))
        }
        "kernel" => {
            if args.is_empty() {
                return Err(usage("kernel <image>..."));
            }
            let images = args.iter().map(|a| s.expr(a)).collect::<Result<Vec<_>, _>>()?;
            let ring = s.ring();
            let target = Ring::with_order_new(ring.field(), &kernel_names(images.len()), ring.order().clone());
            CommandOutput::lines(basis_lines(&kernel_of_map(&target, &images)?))
        }
        "rees" => {
            let a = arity(args, 1, "rees <ideal>")?;
            let r = rees_ideal(&s.ideal(&a[0])?)?;
            CommandOutput::lines(basis_lines(&r.ideal))
        }
        "lineartype" => {
            let a = arity(args, 1, "lineartype <ideal>")?;
            let c = check_linear_type(&s.ideal(&a[0])?)?;
            let mut lines = vec![format!("linear type: {}", c.linear_type)];
            if let Some(w) = c.witness {
                lines.push(format!("witness: {w}"));
            }
            CommandOutput::lines(lines)
        }
        "dim" => {
            let a = arity(args, 1, "dim <ideal>")?;
            CommandOutput::lines(vec![s.ideal(&a[0])?.krull_dim_quotient().to_string()])
        }
        "colength" => {
            let a = arity(args, 1, "colength <ideal>")?;
            let c = s.ideal(&a[0])?.colength();
            CommandOutput::lines(vec![match c {
                Colength::Finite(n) => n.to_string(),
                Colength::Infinite => "infinite".into(),
            }])
        }
        "minors" => {
            let a = arity(args, 2, "minors <matrix> <size>")?;
            let size: usize = a[1].parse().map_err(|_| usage("minors <matrix> <size>"))?;
            CommandOutput::lines(poly_lines(&s.matrix(&a[0])?.maximal_minors(size)?))
        }
        "regseq" => {
            if args.is_empty() {
                return Err(usage("regseq <poly>..."));
            }
            let seq = args.iter().map(|a| s.expr(a)).collect::<Result<Vec<_>, _>>()?;
            CommandOutput::report(is_regular_sequence(&seq)?)
        }
        "complex" => {
            if args.is_empty() {
                return Err(usage("complex <matrix>..."));
            }
            let c = complex_from(s, args, None)?;
            CommandOutput::report(verify_complex(&c))
        }
        "be" => {
            let text = "be <matrix>... --ranks r1,r2,... --cert p,q,... (one --cert per map)";
            let split = args.iter().position(|a| a == "--ranks").ok_or_else(|| usage(text))?;
            let ranks: Vec<usize> = args
                .get(split + 1)
                .ok_or_else(|| usage(text))?
                .split(',')
                .map(|r| r.trim().parse().map_err(|_| usage(text)))
                .collect::<Result<_, _>>()?;
            let mut certs = Vec::new();
            let mut rest = args[split + 2..].iter();
            while let Some(flag) = rest.next() {
                let list = rest.next().filter(|_| flag == "--cert").ok_or_else(|| usage(text))?;
                let ws = list.split(',').map(|p| s.expr(p)).collect::<Result<Vec<_>, _>>()?;
                certs.push(GradeCertificate::new(ws));
            }
            let c = complex_from(s, &args[..split], Some(ranks))?;
            CommandOutput::report(buchsbaum_eisenbud(&c, &certs)?)
        }
        "syzygetic" => {
            let a = arity(args, 3, "syzygetic <ideal H> <poly f> <ideal I>")?;
            let h = s.ideal(&a[0])?;
            let f = s.expr(&a[1])?;
            let i = s.ideal(&a[2])?;
            CommandOutput::report(syzygetic_obstruction(&h, &f, &i)?)
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown command `{other}`; expected one of {}",
                COMMANDS.join(", ")
            )))
        }
    };
    Ok(out)
}

fn complex_from(s: &SessionInput, names: &[String], ranks: Option<Vec<usize>>) -> Result<ComplexData, CliError> {
    let matrices = names
        .iter()
        .map(|n| s.matrix(n).cloned())
        .collect::<Result<Vec<_>, _>>()?;
    let ranks = ranks.unwrap_or_else(|| vec![0; matrices.len()]);
    Ok(ComplexData::new(matrices, ranks)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(src: &str, cmd: &str, args: &[&str]) -> Vec<String> {
        let s = SessionInput::parse(src).unwrap();
        let args: Vec<String> = args.iter().map(|a| a.to_string()).collect();
        run_command(&s, cmd, &args).unwrap().lines
    }

    #[test]
    fn groebner_basis_command() {
        assert_eq!(run("ring Q[x,y];\nideal I = x^2 + y, y;", "gb", &["I"]), vec!["y", "x^2"]);
    }

    #[test]
    fn kernel_of_cusp() {
        assert_eq!(run("ring Q[t];", "kernel", &["t^2", "t^3"]), vec!["x^3 - y^2"]);
    }

    #[test]
    fn colon_accepts_ideal_or_poly() {
        let src = "ring Q[x,y];\nideal I = x^2, x*y;\nideal J = x;";
        assert_eq!(run(src, "colon", &["I", "x"]), vec!["y", "x"]);
        assert_eq!(run(src, "colon", &["I", "J"]), vec!["y", "x"]);
    }

    #[test]
    fn unknown_command_and_name() {
        let s = SessionInput::parse("ring Q[x];\nideal I = x;").unwrap();
        assert!(matches!(run_command(&s, "frobnicate", &[]), Err(CliError::Usage(_))));
        assert!(matches!(
            run_command(&s, "gb", &["K".to_string()]),
            Err(CliError::UnknownName(_))
        ));
    }

    #[test]
    fn be_on_koszul() {
        let src = "ring Q[x,y];\nmatrix A 1x2 = [x, y];\nmatrix B 2x1 = [-y; x];";
        let s = SessionInput::parse(src).unwrap();
        let args: Vec<String> = ["A", "B", "--ranks", "1,1", "--cert", "x", "--cert", "x,y"]
            .iter()
            .map(|a| a.to_string())
            .collect();
        assert!(run_command(&s, "be", &args).unwrap().success());
    }
}

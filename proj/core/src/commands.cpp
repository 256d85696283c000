#include "semialg/commands.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include "semialg/errors.hpp"
#include "semialg/generators.hpp"
#include "semialg/proof_io.hpp"
#include "semialg/system_io.hpp"

namespace semialg {

namespace {

LinSystemFp load_system(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return parse_system(in);
}

Proof load_proof(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return read_proof(in);
}

}  // namespace

std::string format_assignment(const std::vector<std::uint32_t>& assignment) {
    std::ostringstream os;
    os << "x=(";
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        if (i) os << ',';
        os << assignment[i];
    }
    os << ')';
    return os.str();
}

std::string format_certificate(const Certificate& cert) {
    std::ostringstream os;
    os << "J=[";
    for (std::size_t i = 0; i < cert.rows.size(); ++i) {
        if (i) os << ',';
        os << cert.rows[i] + 1;  // 1-based rows in human output
    }
    os << "] y=[";
    for (std::size_t i = 0; i < cert.multipliers.size(); ++i) {
        if (i) os << ',';
        os << cert.multipliers[i];
    }
    os << ']';
    return os.str();
}

std::string format_metrics(const ProofMetrics& m) {
    std::ostringstream os;
    os << "lines=" << m.line_count << " length=" << m.length << " size=" << m.size
       << " degree=" << m.degree << " tree_like=" << (m.tree_like ? "true" : "false")
       << " max_coeff_bits=" << m.max_coeff_bits;
    return os.str();
}

int cmd_refute(const std::string& system_path, const std::string& proof_path, RefuteMode mode,
               std::ostream& out, std::ostream& err) {
    LinSystemFp sys(2, 1);
    try {
        sys = load_system(system_path);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    if (mode == RefuteMode::F2 && sys.p() != 2) {
        err << "error: mode f2 requires field 2\n";
        return 2;
    }
    const bool plain = mode == RefuteMode::F2 || (mode == RefuteMode::Auto && sys.p() == 2);

    SolveResult res = solve(sys);
    if (const auto* sol = std::get_if<Solution>(&res)) {
        out << "SAT " << format_assignment(sol->assignment) << '\n';
        return 1;
    }
    const Certificate& cert = std::get<Certificate>(res);

    try {
        RefutationReport report = plain ? refute_f2(sys, cert) : refute_fp(sys, cert);
        const ProofMetrics m = check(report.proof);  // self-check before emitting
        if (!is_refutation(report.proof)) throw Error("final line is not -1");
        std::ofstream of(proof_path);
        if (!of) {
            err << "error: cannot write " << proof_path << '\n';
            return 2;
        }
        write_proof(of, report.proof);
        out << "REFUTED mode=" << (plain ? "f2" : "fp") << ' ' << format_metrics(m) << '\n';
        return 0;
    } catch (const CheckError& e) {
        err << "internal error: emitted proof rejected: " << e.what() << '\n';
        return 3;
    } catch (const BuildError& e) {
        err << "internal error: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        err << "internal error: " << e.what() << '\n';
        return 3;
    }
}

int cmd_check(const std::string& proof_path, const std::string& system_path, std::ostream& out,
              std::ostream& err) {
    Proof proof;
    LinSystemFp sys(2, 1);
    try {
        proof = load_proof(proof_path);
        sys = load_system(system_path);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    if (proof.p != sys.p()) {
        err << "hypothesis mismatch: proof is over field " << proof.p << ", system over "
            << sys.p() << '\n';
        return 4;
    }
    std::vector<Poly> expected;
    try {
        expected = proof.mode == VarMode::Plain ? HypothesisBank::for_f2(sys).polys()
                                                : HypothesisBank::for_fp(sys).polys();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    if (expected.size() != proof.hypotheses.size()) {
        err << "hypothesis mismatch: expected " << expected.size() << " hypotheses, proof has "
            << proof.hypotheses.size() << '\n';
        return 4;
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (!(expected[i] == proof.hypotheses[i])) {
            err << "hypothesis mismatch at index " << i << '\n';
            return 4;
        }
    }

    try {
        const ProofMetrics m = check(proof);
        if (!is_refutation(proof)) {
            err << "rule violation at line " << (proof.lines.empty() ? 0 : proof.lines.back().id)
                << ": final line is not the constant -1\n";
            return 5;
        }
        out << "VERIFIED " << format_metrics(m) << '\n';
        return 0;
    } catch (const CheckError& e) {
        err << "rule violation at line "
            << (e.line == CheckError::npos ? std::string("<header>") : std::to_string(e.line))
            << ": " << e.what() << '\n';
        return 5;
    }
}

int cmd_solve(const std::string& system_path, std::ostream& out, std::ostream& err) {
    try {
        const LinSystemFp sys = load_system(system_path);
        const SolveResult res = solve(sys);
        if (const auto* sol = std::get_if<Solution>(&res)) {
            out << "SOLUTION " << format_assignment(sol->assignment) << '\n';
        } else {
            out << "CERTIFICATE " << format_certificate(std::get<Certificate>(res)) << '\n';
        }
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

int cmd_oracle(const std::string& system_path, std::uint64_t cap, std::ostream& out,
               std::ostream& err) {
    try {
        const LinSystemFp sys = load_system(system_path);
        const auto res = brute_force_sat(sys, cap);
        if (res) {
            out << "SAT " << format_assignment(res->assignment) << '\n';
        } else {
            out << "UNSAT\n";
        }
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

int cmd_stats(const std::string& proof_path, std::ostream& out, std::ostream& err) {
    Proof proof;
    try {
        proof = load_proof(proof_path);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    try {
        const ProofMetrics m = check(proof);
        out << "mode=" << (proof.mode == VarMode::Plain ? "f2" : "fp") << " field=" << proof.p
            << " hypotheses=" << proof.hypotheses.size() << ' ' << format_metrics(m)
            << " refutation=" << (is_refutation(proof) ? "true" : "false") << '\n';
        return 0;
    } catch (const CheckError& e) {
        err << "rule violation at line "
            << (e.line == CheckError::npos ? std::string("<header>") : std::to_string(e.line))
            << ": " << e.what() << '\n';
        return 5;
    }
}

BenchRecord bench_instance(const std::string& family, const LinSystemFp& sys, RefuteMode mode) {
    const bool plain = mode == RefuteMode::F2 || (mode == RefuteMode::Auto && sys.p() == 2);
    const auto start = std::chrono::steady_clock::now();
    const SolveResult res = solve(sys);
    if (!std::holds_alternative<Certificate>(res)) throw Error("bench instance is satisfiable");
    const Certificate& cert = std::get<Certificate>(res);
    RefutationReport report = plain ? refute_f2(sys, cert) : refute_fp(sys, cert);
    const ProofMetrics m = check(report.proof);
    if (!is_refutation(report.proof)) throw Error("bench refutation did not close");
    const auto stop = std::chrono::steady_clock::now();

    BenchRecord rec;
    rec.family = family;
    rec.n = sys.var_count();
    rec.p = sys.p();
    rec.w = sys.width();
    rec.length = m.length;
    rec.size = m.size;
    rec.degree = m.degree;
    rec.lines = m.line_count;
    rec.ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return rec;
}

int cmd_bench(const std::string& family, std::uint32_t n_lo, std::uint32_t n_hi,
              std::uint32_t n_step, std::uint64_t p, std::uint32_t w, std::uint64_t seed,
              const std::string& csv_path, std::ostream& out, std::ostream& err) {
    try {
        std::ofstream csv(csv_path);
        if (!csv) throw Error("cannot write " + csv_path);
        csv << "family,n,p,w,length,size,degree,lines,ms\n";
        for (std::uint32_t n = n_lo; n <= n_hi; n += n_step) {
            LinSystemFp sys(2, 1);
            if (family == "tseitin-cycle") {
                if (p != 2) throw Error("tseitin-cycle requires field 2");
                sys = tseitin_cycle(n);
            } else if (family == "random") {
                sys = random_unsat_system(p, n, w, n + 2, seed + n);
            } else {
                throw Error("unknown family: " + family);
            }
            const BenchRecord rec = bench_instance(family, sys, RefuteMode::Auto);
            csv << rec.family << ',' << rec.n << ',' << rec.p << ',' << rec.w << ','
                << rec.length << ',' << rec.size << ',' << rec.degree << ',' << rec.lines << ','
                << rec.ms << '\n';
            out << family << " n=" << rec.n << " p=" << rec.p << " w=" << rec.w
                << " length=" << rec.length << " size=" << rec.size << " degree=" << rec.degree
                << " lines=" << rec.lines << " ms=" << rec.ms << '\n';
        }
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace semialg

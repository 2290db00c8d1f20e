#include "drg/params.hpp"

#include <sstream>
#include <stdexcept>

namespace drg {

std::optional<Rat> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(Int(text));
        }
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        if (num.empty() || den.empty() || den.find('/') != std::string::npos) return std::nullopt;
        Int d(den);
        if (d == 0) return std::nullopt;
        return Rat(Int(num), d);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::string rat_str(const Rat& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

Rat bracket(int j, const Rat& b) {
    if (j < 0) throw std::invalid_argument("bracket: j must be >= 0");
    if (b == 1) return Rat(j);
    return (pow_rat(b, static_cast<unsigned>(j)) - 1) / (b - 1);
}

Rat ClassicalParams::r() const { return bracket(D, b); }

std::vector<std::string> validate(const ClassicalParams& p) {
    std::vector<std::string> why;
    if (p.D < 1) why.push_back("D must be >= 1");
    if (p.D >= 3) {
        if (!is_integer(p.b)) {
            why.push_back("b must be an integer when D >= 3");
        } else if (p.b == 0 || p.b == -1) {
            why.push_back("b must differ from 0 and -1");
        }
        if (p.b >= 1 && p.alpha < 0) why.push_back("alpha must be >= 0 when b >= 1");
    }
    return why;
}

bool IntersectionArray::integral() const {
    for (const Rat& v : b_seq)
        if (!is_integer(v) || v <= 0) return false;
    for (const Rat& v : c_seq)
        if (!is_integer(v) || v <= 0) return false;
    return true;
}

std::string IntersectionArray::to_string() const {
    std::ostringstream os;
    os << "{";
    for (int i = 0; i < D; ++i) os << (i ? "," : "") << b_seq[static_cast<size_t>(i)];
    os << ";";
    for (int i = 1; i <= D; ++i) os << (i > 1 ? "," : "") << c_seq[static_cast<size_t>(i - 1)];
    os << "}";
    return os.str();
}

IntersectionArray intersection_array(const ClassicalParams& p) {
    if (p.D < 1) throw std::invalid_argument("intersection_array: D must be >= 1");
    IntersectionArray arr;
    arr.D = p.D;
    const Rat rD = p.r();
    for (int i = 0; i < p.D; ++i) {
        Rat bi = (rD - bracket(i, p.b)) * (p.beta - p.alpha * bracket(i, p.b));
        arr.b_seq.push_back(bi);
        if (bi <= 0) arr.issues.push_back("b_" + std::to_string(i) + " <= 0");
    }
    for (int i = 1; i <= p.D; ++i) {
        Rat ci = bracket(i, p.b) * (1 + p.alpha * bracket(i - 1, p.b));
        arr.c_seq.push_back(ci);
        if (ci <= 0) arr.issues.push_back("c_" + std::to_string(i) + " <= 0");
    }
    arr.k = arr.b_seq[0];
    for (int i = 1; i <= p.D; ++i) {
        Rat ai = arr.k - (i < p.D ? arr.b(i) : Rat(0)) - arr.c(i);
        arr.a_seq.push_back(ai);
        if (ai < 0) arr.issues.push_back("a_" + std::to_string(i) + " < 0");
    }
    arr.k_dist.push_back(1);
    arr.kdist_ok = true;
    for (int i = 1; i <= p.D; ++i) {
        if (arr.c(i) == 0) {
            arr.issues.push_back("k_" + std::to_string(i) + " undefined (c_" +
                                 std::to_string(i) + " = 0)");
            arr.kdist_ok = false;
            break;
        }
        arr.k_dist.push_back(arr.k_dist.back() * arr.b(i - 1) / arr.c(i));
    }
    if (arr.kdist_ok) {
        arr.n = 0;
        for (const Rat& ki : arr.k_dist) arr.n += ki;
        for (size_t i = 0; i < arr.k_dist.size(); ++i)
            if (!is_integer(arr.k_dist[i]))
                arr.issues.push_back("k_" + std::to_string(i) + " not an integer");
        if (!is_integer(arr.n)) arr.issues.push_back("n not an integer");
    }
    return arr;
}

Fallible<std::vector<Rat>> eigenvalues(const ClassicalParams& p) {
    if (p.b == 0) return Fallible<std::vector<Rat>>::failure("eigenvalues: b = 0");
    IntersectionArray arr = intersection_array(p);
    std::vector<Rat> theta;
    for (int i = 0; i <= p.D; ++i) {
        Rat bi = (i < p.D) ? arr.b(i) : Rat(0);
        theta.push_back(bi / pow_rat(p.b, static_cast<unsigned>(i)) - bracket(i, p.b));
    }
    return Fallible<std::vector<Rat>>::success(std::move(theta));
}

Fallible<StandardSequence> standard_sequence(const IntersectionArray& arr, const Rat& theta) {
    if (arr.k == 0) return Fallible<StandardSequence>::failure("standard_sequence: k = 0");
    StandardSequence seq;
    seq.theta = theta;
    seq.u.push_back(1);
    if (arr.D >= 1) seq.u.push_back(theta / arr.k);
    for (int i = 1; i <= arr.D - 1; ++i) {
        if (arr.b(i) == 0)
            return Fallible<StandardSequence>::failure(
                "standard_sequence: b_" + std::to_string(i) + " = 0 (infeasible array)");
        Rat next = (theta * seq.u[static_cast<size_t>(i)] -
                    arr.c(i) * seq.u[static_cast<size_t>(i - 1)] -
                    arr.a(i) * seq.u[static_cast<size_t>(i)]) /
                   arr.b(i);
        seq.u.push_back(next);
    }
    return Fallible<StandardSequence>::success(std::move(seq));
}

Fallible<StandardSequence> standard_sequence_closed_form(const ClassicalParams& p) {
    if (p.b < 2) return Fallible<StandardSequence>::failure("closed form requires b >= 2");
    if (p.D < 2) return Fallible<StandardSequence>::failure("closed form requires D >= 2");
    if (p.beta == 0) return Fallible<StandardSequence>::failure("closed form requires beta != 0");
    for (int j = 1; j <= p.D - 1; ++j) {
        if (p.beta == p.alpha * bracket(j, p.b))
            return Fallible<StandardSequence>::failure(
                "closed form undefined: beta - alpha[" + std::to_string(j) + "] = 0");
    }
    StandardSequence seq;
    seq.theta = -p.r();
    seq.u.push_back(1);
    Rat prod = 1;
    for (int i = 1; i <= p.D; ++i) {
        // accumulate prod_{j=1}^{i-1}; the i = 1 term is the empty product
        if (i >= 2) {
            Rat aj = p.alpha * bracket(i - 1, p.b);
            prod *= (1 + aj) / (p.beta - aj);
        }
        Rat sign = (i % 2 == 0) ? Rat(1) : Rat(-1);
        seq.u.push_back(sign / p.beta * prod);
    }
    return Fallible<StandardSequence>::success(std::move(seq));
}

Fallible<Rat> multiplicity(const IntersectionArray& arr, const Rat& theta) {
    if (!arr.kdist_ok) return Fallible<Rat>::failure("multiplicity: distance distribution undefined");
    auto seq = standard_sequence(arr, theta);
    if (!seq.ok()) return Fallible<Rat>::failure(seq.error);
    Rat denom = 0;
    for (int i = 0; i <= arr.D; ++i)
        denom += arr.k_dist[static_cast<size_t>(i)] * seq->u[static_cast<size_t>(i)] *
                 seq->u[static_cast<size_t>(i)];
    if (denom == 0) return Fallible<Rat>::failure("multiplicity: zero norm");
    return Fallible<Rat>::success(arr.n / denom);
}

Fallible<GeometricProfile> delsarte_clique_data(const ClassicalParams& p) {
    if (p.b < 2 || p.D < 2)
        return Fallible<GeometricProfile>::failure("delsarte_clique_data requires b >= 2, D >= 2");
    GeometricProfile gp;
    for (int j = 0; j <= p.D - 1; ++j) gp.phi.push_back(1 + p.alpha * bracket(j, p.b));
    for (int j = 1; j <= p.D; ++j) gp.tau.push_back(bracket(j, p.b));
    gp.delsarte_order = p.beta + 1;
    gp.lines_per_vertex = p.r();
    if (p.alpha != 0) {
        gp.has_assemblies = true;
        gp.assemblies_per_vertex = p.beta / p.alpha;
        gp.assembly_order = p.alpha * p.r() + 1;
    } else {
        gp.note = "alpha = 0: no assembly structure";
    }
    return Fallible<GeometricProfile>::success(std::move(gp));
}

std::vector<ClassicalParams> recognize_classical(const IntersectionArray& arr) {
    std::vector<ClassicalParams> found;
    if (arr.D < 2 || !arr.integral() || !arr.feasible()) return found;
    const Rat c2 = arr.c(2);
    // any candidate b satisfies 1 + |b| <= c_2 + 1, i.e. |b| <= c_2
    Int bound = to_int(c2);
    for (Int bi = -bound; bi <= bound; ++bi) {
        if (bi == 0 || bi == -1) continue;
        ClassicalParams p;
        p.D = arr.D;
        p.b = Rat(bi);
        p.alpha = c2 / (p.b + 1) - 1;
        Rat rD = p.r();
        if (rD == 0) continue;
        p.beta = arr.b(0) / rD;
        IntersectionArray probe = intersection_array(p);
        if (probe.b_seq == arr.b_seq && probe.c_seq == arr.c_seq) found.push_back(p);
    }
    return found;
}

}  // namespace drg

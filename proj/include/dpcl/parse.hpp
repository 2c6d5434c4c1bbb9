/*
 * Copyright 2026 The dpcl Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cctype>
#include <filesystem>
#include <fstream>

#include "branchcurve.hpp"
#include "twotorsion.hpp"

namespace dpcl {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// sparse polynomial over Q in named variables
struct SparsePoly {
    std::map<std::vector<int>, Rat> terms;
    size_t nvars = 0;

    explicit SparsePoly(size_t n = 0) : nvars(n) {}
    static SparsePoly constant(size_t n, const Rat& c) {
        SparsePoly p(n);
        if (sgn(c)) p.terms[std::vector<int>(n, 0)] = c;
        return p;
    }
    static SparsePoly variable(size_t n, size_t i) {
        SparsePoly p(n);
        std::vector<int> e(n, 0);
        e[i] = 1;
        p.terms[e] = 1;
        return p;
    }
    bool is_constant() const { return terms.empty() || (terms.size() == 1 && std::all_of(terms.begin()->first.begin(), terms.begin()->first.end(), [](int k) { return k == 0; })); }
    Rat constant_value() const { return terms.empty() ? Rat(0) : terms.begin()->second; }
    int degree_in(size_t i) const {
        int d = -1;
        for (auto& [e, c] : terms) d = std::max(d, e[i]);
        return d;
    }
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) {
        for (auto& [e, c] : b.terms) {
            Rat& s = a.terms[e];
            s += c;
            if (sgn(s) == 0) a.terms.erase(e);
        }
        return a;
    }
    SparsePoly operator-() const {
        SparsePoly r = *this;
        for (auto& [e, c] : r.terms) c = -c;
        return r;
    }
    friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return a + (-b); }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly r(a.nvars);
        for (auto& [e1, c1] : a.terms)
            for (auto& [e2, c2] : b.terms) {
                std::vector<int> e(a.nvars);
                for (size_t i = 0; i < a.nvars; ++i) e[i] = e1[i] + e2[i];
                Rat& s = r.terms[e];
                s += c1 * c2;
                if (sgn(s) == 0) r.terms.erase(e);
            }
        return r;
    }
};

class ExprParser {
  public:
    ExprParser(std::string text, std::vector<std::string> vars) : s_(std::move(text)), vars_(std::move(vars)) {}

    SparsePoly parse() {
        SparsePoly p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string& m) const { throw ParseError("expression: " + m + " at column " + std::to_string(pos_ + 1) + " in '" + s_ + "'"); }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    SparsePoly expr() {
        SparsePoly p = term();
        for (;;) {
            if (eat('+')) p = p + term();
            else if (eat('-')) p = p - term();
            else return p;
        }
    }
    SparsePoly term() {
        SparsePoly p = unary();
        for (;;) {
            if (eat('*')) {
                p = p * unary();
            } else if (eat('/')) {
                SparsePoly d = unary();
                if (!d.is_constant() || sgn(d.constant_value()) == 0) fail("division by a non-constant or zero");
                p = p * SparsePoly::constant(vars_.size(), 1 / d.constant_value());
            } else {
                // implicit product: 3t, 2(t+1)
                skip();
                if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(')) p = p * unary();
                else return p;
            }
        }
    }
    SparsePoly unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    SparsePoly power() {
        SparsePoly b = atom();
        if (eat('^')) {
            skip();
            size_t st = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (st == pos_) fail("exponent must be a non-negative integer");
            int e = std::stoi(s_.substr(st, pos_ - st));
            SparsePoly r = SparsePoly::constant(vars_.size(), 1);
            for (int k = 0; k < e; ++k) r = r * b;
            return r;
        }
        return b;
    }
    SparsePoly atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            SparsePoly p = expr();
            if (!eat(')')) fail("missing ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t st = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return SparsePoly::constant(vars_.size(), Rat(Int(s_.substr(st, pos_ - st))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t st = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name = s_.substr(st, pos_ - st);
            for (size_t i = 0; i < vars_.size(); ++i)
                if (vars_[i] == name) return SparsePoly::variable(vars_.size(), i);
            pos_ = st;
            fail("unknown variable '" + name + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string s_;
    std::vector<std::string> vars_;
    size_t pos_ = 0;
};

inline Rat parse_rational(const std::string& text) {
    SparsePoly p = ExprParser(text, {}).parse();
    return p.constant_value();
}

inline QPoly parse_univariate(const std::string& text, const std::string& var = "t") {
    SparsePoly p = ExprParser(text, {var}).parse();
    std::vector<Rat> c(static_cast<size_t>(std::max(0, p.degree_in(0))) + 1, Rat(0));
    for (auto& [e, v] : p.terms) c[e[0]] = v;
    return QPoly(c);
}

inline TriForm parse_form(const std::string& text) {
    SparsePoly p = ExprParser(text, {"x", "y", "z"}).parse();
    if (p.terms.empty()) throw ParseError("form is zero");
    int d = -1;
    for (auto& [e, v] : p.terms) {
        int k = e[0] + e[1] + e[2];
        if (d >= 0 && k != d) throw ParseError("form is not homogeneous: '" + text + "'");
        d = k;
    }
    std::vector<Rat> coeffs;
    for (auto& m : TriForm::monomials(d)) {
        auto it = p.terms.find({m[0], m[1], m[2]});
        coeffs.push_back(it == p.terms.end() ? Rat(0) : it->second);
    }
    return TriForm::from_coeffs(d, coeffs);
}

// alpha t^2 + beta t + gamma W + delta
inline KummerFunction parse_kummer(const std::string& text) {
    SparsePoly p = ExprParser(text, {"t", "W"}).parse();
    KummerFunction h;
    for (auto& [e, v] : p.terms) {
        if (e == std::vector<int>{2, 0}) h.alpha = v;
        else if (e == std::vector<int>{1, 0}) h.beta = v;
        else if (e == std::vector<int>{0, 1}) h.gamma = v;
        else if (e == std::vector<int>{0, 0}) h.delta = v;
        else throw ParseError("h must lie in span{1, t, t^2, W}: '" + text + "'");
    }
    return h;
}

inline std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n"), b = s.find_last_not_of(" \t\r\n");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

struct KeyValue {
    std::string key, value;
    int line = 0;
};

// key = value lines; '#' starts a comment
inline std::vector<KeyValue> read_key_values(std::istream& in, const std::string& what) {
    std::vector<KeyValue> out;
    std::string line;
    for (int n = 1; std::getline(in, line); ++n) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(what + ":" + std::to_string(n) + ": expected 'key = value'");
        out.push_back({trim(line.substr(0, eq)), trim(line.substr(eq + 1)), n});
    }
    return out;
}

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw ParseError("cannot read " + p.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline QPoint parse_point(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 3) throw ParseError("point must be 'a : b : c', got '" + text + "'");
    QPoint p(parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2]));
    if (sgn(p.c[0]) == 0 && sgn(p.c[1]) == 0 && sgn(p.c[2]) == 0) throw ParseError("point with all coordinates zero");
    return p;
}

// three lines a2 = ..., a1 = ..., a0 = ...
inline TrigonalModel parse_model(const std::string& text, const std::string& what = "model") {
    std::istringstream in(text);
    std::map<std::string, QPoly> got;
    for (auto& kv : read_key_values(in, what)) {
        if (kv.key != "a0" && kv.key != "a1" && kv.key != "a2") throw ParseError(what + ":" + std::to_string(kv.line) + ": unknown key '" + kv.key + "'");
        got[kv.key] = parse_univariate(kv.value, "t");
    }
    for (const char* k : {"a0", "a1", "a2"})
        if (!got.count(k)) throw ParseError(what + ": missing " + std::string(k));
    return make_model({got["a0"], got["a1"], got["a2"]});
}

// h = ... lines (h or h1..h8)
inline std::vector<KummerFunction> parse_kummer_file(const std::string& text, const std::string& what = "h") {
    std::istringstream in(text);
    std::vector<KummerFunction> out;
    for (auto& kv : read_key_values(in, what)) {
        if (kv.key.empty() || kv.key[0] != 'h') throw ParseError(what + ":" + std::to_string(kv.line) + ": unknown key '" + kv.key + "'");
        KummerFunction h = parse_kummer(kv.value);
        h.index = static_cast<int>(out.size()) + 1;
        out.push_back(h);
    }
    if (out.empty()) throw ParseError(what + ": no functions");
    return out;
}

// lines "p k"
inline std::vector<std::pair<Int, int>> parse_table(const std::string& text, const std::string& what = "table") {
    std::istringstream in(text);
    std::vector<std::pair<Int, int>> out;
    std::string line;
    for (int n = 1; std::getline(in, line); ++n) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string p;
        long k;
        if (!(ls >> p)) continue;
        if (!(ls >> k)) throw ParseError(what + ":" + std::to_string(n) + ": expected 'prime exponent'");
        Int P(p);
        if (!is_probable_prime(P) || k < 0) throw ParseError(what + ":" + std::to_string(n) + ": bad row");
        out.emplace_back(P, static_cast<int>(k));
    }
    return out;
}

struct PipelineConfig {
    std::filesystem::path source;
    std::vector<QPoint> points;
    std::optional<TriForm> u;
    std::optional<std::filesystem::path> model_file, h_file;
    long prime_bound = 200;
    size_t count = 3;
    size_t aux_budget = 24;
    int precision = 12;
    unsigned seed = 20160701u;
    std::string strategy = "positive";
    std::filesystem::path output_dir = "reports";
};

inline PipelineConfig parse_config(const std::string& text, const std::filesystem::path& source = {}) {
    PipelineConfig c;
    c.source = source;
    std::istringstream in(text);
    std::map<int, QPoint> pts;
    std::filesystem::path base = source.has_parent_path() ? source.parent_path() : std::filesystem::path(".");
    auto num = [](const KeyValue& kv) {
        try {
            size_t used = 0;
            long v = std::stol(kv.value, &used);
            if (used != kv.value.size() || v < 0) throw std::invalid_argument("");
            return v;
        } catch (const std::exception&) {
            throw ParseError("config:" + std::to_string(kv.line) + ": '" + kv.key + "' needs a non-negative integer");
        }
    };
    for (auto& kv : read_key_values(in, "config")) {
        const std::string& k = kv.key;
        try {
            if (k.rfind("point_", 0) == 0) {
                int i = std::stoi(k.substr(6));
                if (i < 1 || i > 8 || pts.count(i)) throw ParseError("bad or repeated point index");
                pts[i] = parse_point(kv.value);
            } else if (k == "u") {
                c.u = parse_form(kv.value);
            } else if (k == "model") {
                c.model_file = base / kv.value;
            } else if (k == "h") {
                c.h_file = base / kv.value;
            } else if (k == "prime_bound") {
                c.prime_bound = num(kv);
            } else if (k == "count") {
                c.count = static_cast<size_t>(num(kv));
            } else if (k == "aux_budget") {
                c.aux_budget = static_cast<size_t>(num(kv));
            } else if (k == "precision") {
                c.precision = static_cast<int>(num(kv));
            } else if (k == "seed") {
                c.seed = static_cast<unsigned>(num(kv));
            } else if (k == "strategy") {
                if (kv.value != "positive" && kv.value != "negative" && kv.value != "both") throw ParseError("strategy must be positive, negative or both");
                c.strategy = kv.value;
            } else if (k == "output_dir") {
                c.output_dir = kv.value;
            } else {
                throw ParseError("unknown key '" + k + "'");
            }
        } catch (const ParseError& e) {
            throw ParseError("config:" + std::to_string(kv.line) + ": " + e.what());
        } catch (const std::exception&) {
            throw ParseError("config:" + std::to_string(kv.line) + ": malformed entry '" + k + "'");
        }
    }
    if (!pts.empty() && pts.size() != 8) throw ParseError("config: expected 8 points, found " + std::to_string(pts.size()));
    for (auto& [i, p] : pts) c.points.push_back(p);
    if (c.points.empty() && !c.model_file) throw ParseError("config: needs either 8 points or a model file");
    if (c.model_file.has_value() != c.h_file.has_value()) throw ParseError("config: model and h files go together");
    if (c.precision < 2) throw ParseError("config: precision must be at least 2");
    return c;
}

inline PipelineConfig load_config(const std::filesystem::path& p) { return parse_config(read_file(p), p); }

}  // namespace dpcl

// Copyright 2026 The qconv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qconv/code.h"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qconv/bits.h"
#include "qconv/errors.h"

namespace qconv {

CodeSpec CodeSpec::from_strings(size_t n, size_t k, size_t m, const std::vector<std::string> &gens) {
    CodeSpec c;
    c.n = n;
    c.k = k;
    c.m = m;
    for (const std::string &g : gens) {
        c.gens.push_back(PauliPoly::from_string(g, n));
        c.signs.push_back(1);
    }
    return c;
}

PolyMatrix CodeSpec::matrix() const {
    PolyMatrix out(gens.size(), 2 * n);
    for (size_t i = 0; i < gens.size(); i++) {
        for (size_t c = 0; c < n; c++) {
            out.at(i, c) = gens[i].x()[c];
            out.at(i, n + c) = gens[i].z()[c];
        }
    }
    return out;
}

bool operator==(const CodeSpec &a, const CodeSpec &b) {
    return a.n == b.n && a.k == b.k && a.m == b.m && a.gens == b.gens && a.signs == b.signs &&
           a.comments == b.comments;
}

ValidationReport validate(const CodeSpec &c) {
    ValidationReport rep;
    auto fail = [&](bool &flag, const std::string &msg) {
        flag = false;
        rep.ok = false;
        rep.messages.push_back(msg);
    };

    if (c.n == 0 || c.k > c.n || c.m > c.n) {
        fail(rep.shape_ok, "parameters must satisfy n >= 1, k <= n, m <= n");
        return rep;
    }
    if (c.gens.size() != c.n - c.k) {
        fail(rep.shape_ok,
             "expected " + std::to_string(c.n - c.k) + " generators, found " + std::to_string(c.gens.size()));
        return rep;
    }
    if (c.signs.size() != c.gens.size()) {
        fail(rep.shape_ok, "one sign per generator is required");
        return rep;
    }
    for (size_t i = 0; i < c.gens.size(); i++) {
        if (c.gens[i].width() != c.n) {
            fail(rep.shape_ok, "generator " + std::to_string(i + 1) + " has the wrong block width");
            return rep;
        }
        if (c.gens[i].support_end() > c.n + c.m) {
            fail(rep.support_ok, "generator " + std::to_string(i + 1) + " acts outside qubits 1.." +
                                     std::to_string(c.n + c.m));
        }
        if (c.signs[i] != 1 && c.signs[i] != -1) {
            fail(rep.shape_ok, "generator " + std::to_string(i + 1) + " has a sign other than +1/-1");
        }
        if (c.gens[i].is_identity()) {
            fail(rep.independent, "generator " + std::to_string(i + 1) + " is the identity");
        }
    }

    for (size_t a = 0; a < c.gens.size(); a++) {
        for (size_t b = a; b < c.gens.size(); b++) {
            bool ok = gen_commute(c.gens[a], c.gens[b]);
            rep.pairs.push_back({a, b, ok});
            if (!ok) {
                fail(rep.commute_ok, "generators " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                                         " do not commute at every shift");
            }
        }
    }

    if (!rep.support_ok || c.gens.empty()) {
        return rep;
    }
    size_t w = 2 * (c.overlap_blocks() + 1);
    size_t nq = c.n * w + c.m;
    BitMatrix mat(2 * nq);
    for (size_t j = 0; j < w; j++) {
        for (const PauliPoly &g : c.gens) {
            mat.push_row(expand(g, (int64_t)j, nq).flattened());
        }
    }
    rep.window_blocks = w;
    rep.window_rows = mat.num_rows();
    rep.window_rank = rank(mat);
    if (rep.window_rank != rep.window_rows) {
        fail(rep.independent, "generators are dependent: rank " + std::to_string(rep.window_rank) + " of " +
                                  std::to_string(rep.window_rows) + " over " + std::to_string(w) + " blocks");
    }
    return rep;
}

ExpandedStabilizer expand_stabilizer(const CodeSpec &c, size_t q) {
    if (q == 0) {
        throw std::invalid_argument("expand_stabilizer: q must be at least 1");
    }
    ValidationReport rep = validate(c);
    if (!rep.ok) {
        throw std::invalid_argument("expand_stabilizer: invalid code: " + rep.messages.front());
    }
    ExpandedStabilizer out;
    out.q = q;
    out.num_qubits = c.n * q + c.m;
    for (size_t j = 0; j < q; j++) {
        for (const PauliPoly &g : c.gens) {
            out.rows.push_back(expand(g, (int64_t)j, out.num_qubits));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s, size_t *lead = nullptr) {
    size_t a = 0;
    while (a < s.size() && std::isspace((unsigned char)s[a])) {
        a++;
    }
    size_t b = s.size();
    while (b > a && std::isspace((unsigned char)s[b - 1])) {
        b--;
    }
    if (lead) {
        *lead = a;
    }
    return s.substr(a, b - a);
}

}  // namespace

CodeSpec parse_code(std::string_view text) {
    CodeSpec c;
    bool have_header = false;
    size_t line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        line_no++;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        size_t hash = line.find('#');
        std::string_view body = line.substr(0, hash);
        size_t lead = 0;
        std::string_view content = trim(body, &lead);
        if (content.empty()) {
            if (!have_header && hash != std::string_view::npos && trim(body).empty()) {
                c.comments.emplace_back(line.substr(hash + 1));
            }
            if (end == text.size()) {
                break;
            }
            continue;
        }

        if (!have_header) {
            std::istringstream in{std::string(content)};
            long long n, k, m;
            std::string extra;
            if (!(in >> n >> k >> m) || (in >> extra)) {
                throw ParseError("header must be three integers \"n k m\"", line_no, lead + 1);
            }
            if (n < 1 || k < 0 || m < 0) {
                throw ParseError("header values must satisfy n >= 1, k >= 0, m >= 0", line_no, lead + 1);
            }
            if (k > n) {
                throw ParseError("k must not exceed n", line_no, lead + 1);
            }
            if (m > n) {
                throw ParseError("m > n is not supported (the decoder state must fit in one block)", line_no,
                                 lead + 1);
            }
            c.n = (size_t)n;
            c.k = (size_t)k;
            c.m = (size_t)m;
            have_header = true;
        } else {
            if (c.gens.size() == c.n - c.k) {
                throw ParseError("more generator lines than n-k = " + std::to_string(c.n - c.k), line_no, lead + 1);
            }
            int sign = 1;
            size_t col = lead;
            if (content.front() == '+' || content.front() == '-') {
                sign = content.front() == '-' ? -1 : 1;
                content.remove_prefix(1);
                col++;
            }
            if (content.size() != c.n + c.m) {
                throw ParseError("generator must have exactly n+m = " + std::to_string(c.n + c.m) + " letters, found " +
                                     std::to_string(content.size()),
                                 line_no, col + 1);
            }
            for (size_t i = 0; i < content.size(); i++) {
                char ch = content[i];
                if (ch != 'I' && ch != 'X' && ch != 'Y' && ch != 'Z') {
                    throw ParseError(std::string("invalid Pauli letter '") + ch + "'", line_no, col + i + 1);
                }
            }
            c.gens.push_back(PauliPoly::from_string(content, c.n));
            c.signs.push_back(sign);
        }
        if (end == text.size()) {
            break;
        }
    }
    if (!have_header) {
        throw ParseError("missing header line \"n k m\"", line_no, 1);
    }
    if (c.gens.size() != c.n - c.k) {
        throw ParseError("expected " + std::to_string(c.n - c.k) + " generator lines, found " +
                             std::to_string(c.gens.size()),
                         line_no, 1);
    }
    return c;
}

std::string serialize_code(const CodeSpec &c) {
    std::string out;
    for (const std::string &com : c.comments) {
        out += "#" + com + "\n";
    }
    out += std::to_string(c.n) + " " + std::to_string(c.k) + " " + std::to_string(c.m) + "\n";
    for (size_t i = 0; i < c.gens.size(); i++) {
        if (i < c.signs.size() && c.signs[i] < 0) {
            out += '-';
        }
        out += c.gens[i].to_letters(c.n + c.m) + "\n";
    }
    return out;
}

CodeSpec load_code_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open code file " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_code(ss.str());
}

}  // namespace qconv

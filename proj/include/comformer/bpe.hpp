#pragma once

// Byte-level BPE with one vocabulary shared by the code stream, the AST
// label stream and the comment stream. The base alphabet is all 256 bytes,
// so any string can be encoded; merges are learned per whitespace-delimited
// word and never cross word boundaries. AST labels and the abstraction tags
// are atomic: they map to a single id and are never split.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace comformer {

class VocabTooSmall : public std::runtime_error {
public:
    explicit VocabTooSmall(const std::string& what) : std::runtime_error(what) {}
};

class UnknownId : public std::runtime_error {
public:
    explicit UnknownId(int id)
        : std::runtime_error("unknown token id " + std::to_string(id)), id(id) {}
    int id;
};

class BpeIoError : public std::runtime_error {
public:
    explicit BpeIoError(const std::string& what) : std::runtime_error(what) {}
};

class BpeModel {
public:
    static constexpr int kPadId = 0;
    static constexpr int kSosId = 1;
    static constexpr int kEosId = 2;
    static constexpr int kSepId = 3;
    static constexpr int kNumTagId = 4;
    static constexpr int kStrTagId = 5;
    static constexpr int kNumReserved = 6;
    static constexpr int kNumBytes = 256;
    static constexpr int kBaseSize = kNumReserved + kNumBytes;  // 262

    BpeModel() = default;

    int size() const { return static_cast<int>(vocab_.size()); }
    const std::vector<std::string>& vocab() const { return vocab_; }
    const std::vector<std::pair<std::string, std::string>>& merges() const { return merges_; }
    int atomic_count() const { return atomic_count_; }

    const std::string& token(int id) const {
        if (id < 0 || id >= size()) throw UnknownId(id);
        return vocab_[id];
    }

    int id_of(const std::string& tok) const {
        auto it = token_to_id_.find(tok);
        return it == token_to_id_.end() ? -1 : it->second;
    }

    static int byte_id(unsigned char b) { return kNumReserved + static_cast<int>(b); }

    // True for ids whose token never results from merging (reserved specials,
    // bytes, registered atomic tokens).
    bool is_atomic_id(int id) const { return id < kBaseSize + atomic_count_; }

    // Encode one whitespace-free word: atomic lookup first, else byte-level
    // merges in learned-rank order.
    std::vector<int> encode_word(const std::string& word) const {
        std::vector<int> ids;
        if (word.empty()) return ids;
        auto it = token_to_id_.find(word);
        if (it != token_to_id_.end() && is_atomic_id(it->second)) {
            ids.push_back(it->second);
            return ids;
        }
        std::vector<int> syms;
        syms.reserve(word.size());
        for (unsigned char b : std::string_view(word)) syms.push_back(byte_id(b));
        while (syms.size() >= 2) {
            int best_rank = -1;
            for (size_t i = 0; i + 1 < syms.size(); ++i) {
                auto r = merge_rank_.find(pair_key(syms[i], syms[i + 1]));
                if (r != merge_rank_.end() && (best_rank < 0 || r->second < best_rank))
                    best_rank = r->second;
            }
            if (best_rank < 0) break;
            const int left = merge_left_[best_rank];
            const int right = merge_right_[best_rank];
            const int prod = kBaseSize + atomic_count_ + best_rank;
            std::vector<int> next;
            next.reserve(syms.size());
            for (size_t i = 0; i < syms.size();) {
                if (i + 1 < syms.size() && syms[i] == left && syms[i + 1] == right) {
                    next.push_back(prod);
                    i += 2;
                } else {
                    next.push_back(syms[i]);
                    ++i;
                }
            }
            syms.swap(next);
        }
        return syms;
    }

    // Encode arbitrary text. Whitespace runs become raw byte ids so that
    // decode(encode(s)) == s exactly for every byte string.
    std::vector<int> encode(const std::string& text) const {
        std::vector<int> ids;
        size_t i = 0;
        const size_t n = text.size();
        while (i < n) {
            if (is_ws(text[i])) {
                while (i < n && is_ws(text[i])) {
                    ids.push_back(byte_id(static_cast<unsigned char>(text[i])));
                    ++i;
                }
            } else {
                size_t start = i;
                while (i < n && !is_ws(text[i])) ++i;
                auto word_ids = encode_word(text.substr(start, i - start));
                ids.insert(ids.end(), word_ids.begin(), word_ids.end());
            }
        }
        return ids;
    }

    // Concatenate token byte content. Control specials (PAD/SOS/EOS/SEP) are
    // dropped; the abstraction tags render as their literal text.
    std::string decode(const std::vector<int>& ids) const {
        std::string out;
        for (int id : ids) {
            if (id < 0 || id >= size()) throw UnknownId(id);
            if (id <= kSepId) continue;
            out += vocab_[id];
        }
        return out;
    }

    // ---- training -----------------------------------------------------------

    // Greedy highest-frequency pair merging over whitespace-split words until
    // vocab_size is reached or no adjacent pair occurs twice. Equal counts
    // break ties to the lexicographically smallest (left bytes, then right).
    static BpeModel train(const std::vector<std::string>& texts, int vocab_size,
                          const std::vector<std::string>& atomic_tokens = {}) {
        BpeModel m;
        m.init_base(atomic_tokens);
        if (vocab_size < m.size())
            throw VocabTooSmall("vocab_size " + std::to_string(vocab_size) +
                                " below floor " + std::to_string(m.size()));

        // Distinct words with frequencies; atomic tokens never take part.
        std::unordered_map<std::string, long long> word_freq;
        for (const std::string& text : texts) {
            size_t i = 0;
            while (i < text.size()) {
                while (i < text.size() && is_ws(text[i])) ++i;
                size_t start = i;
                while (i < text.size() && !is_ws(text[i])) ++i;
                if (i > start) {
                    std::string w = text.substr(start, i - start);
                    auto it = m.token_to_id_.find(w);
                    if (it == m.token_to_id_.end() || !m.is_atomic_id(it->second))
                        ++word_freq[w];
                }
            }
        }

        std::vector<std::vector<int>> words;
        std::vector<long long> freqs;
        words.reserve(word_freq.size());
        for (auto& [w, f] : word_freq) {
            std::vector<int> syms;
            syms.reserve(w.size());
            for (unsigned char b : w) syms.push_back(byte_id(b));
            words.push_back(std::move(syms));
            freqs.push_back(f);
        }

        std::unordered_map<uint64_t, long long> pair_counts;
        std::unordered_map<uint64_t, std::unordered_set<size_t>> pair_words;
        for (size_t wi = 0; wi < words.size(); ++wi) {
            const auto& syms = words[wi];
            for (size_t i = 0; i + 1 < syms.size(); ++i) {
                uint64_t key = pair_key(syms[i], syms[i + 1]);
                pair_counts[key] += freqs[wi];
                pair_words[key].insert(wi);
            }
        }

        // Lazy-deletion max-heap keyed by (count, token bytes).
        struct HeapEntry {
            long long count;
            uint64_t key;
            std::string left, right;
        };
        auto heap_less = [](const HeapEntry& a, const HeapEntry& b) {
            if (a.count != b.count) return a.count < b.count;
            if (a.left != b.left) return a.left > b.left;
            return a.right > b.right;
        };
        std::priority_queue<HeapEntry, std::vector<HeapEntry>, decltype(heap_less)> heap(heap_less);
        auto push_pair = [&](uint64_t key, long long c) {
            if (c >= 2)
                heap.push(HeapEntry{c, key, m.vocab_[unpack_left(key)], m.vocab_[unpack_right(key)]});
        };
        for (auto& [key, c] : pair_counts) push_pair(key, c);

        while (m.size() < vocab_size && !heap.empty()) {
            HeapEntry top = heap.top();
            heap.pop();
            auto cur = pair_counts.find(top.key);
            if (cur == pair_counts.end() || cur->second != top.count || top.count < 2) continue;
            const int a = unpack_left(top.key);
            const int b = unpack_right(top.key);
            const std::string product = m.vocab_[a] + m.vocab_[b];
            if (m.token_to_id_.count(product)) {  // would collide with an existing token
                pair_counts[top.key] = 0;
                continue;
            }
            const int prod_id = m.add_merge(a, b, product);

            auto affected_it = pair_words.find(top.key);
            std::vector<size_t> affected(affected_it->second.begin(), affected_it->second.end());
            std::sort(affected.begin(), affected.end());
            std::vector<uint64_t> touched;
            for (size_t wi : affected) {
                auto& syms = words[wi];
                const long long f = freqs[wi];
                for (size_t i = 0; i + 1 < syms.size(); ++i) {
                    uint64_t key = pair_key(syms[i], syms[i + 1]);
                    pair_counts[key] -= f;
                    pair_words[key].erase(wi);
                }
                std::vector<int> next;
                next.reserve(syms.size());
                for (size_t i = 0; i < syms.size();) {
                    if (i + 1 < syms.size() && syms[i] == a && syms[i + 1] == b) {
                        next.push_back(prod_id);
                        i += 2;
                    } else {
                        next.push_back(syms[i]);
                        ++i;
                    }
                }
                syms.swap(next);
                for (size_t i = 0; i + 1 < syms.size(); ++i) {
                    uint64_t key = pair_key(syms[i], syms[i + 1]);
                    pair_counts[key] += f;
                    pair_words[key].insert(wi);
                    touched.push_back(key);
                }
            }
            std::sort(touched.begin(), touched.end());
            touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
            for (uint64_t key : touched) push_pair(key, pair_counts[key]);
        }
        return m;
    }

    // Build a model with just the base alphabet and atomics (zero merges).
    static BpeModel base_model(const std::vector<std::string>& atomic_tokens = {}) {
        BpeModel m;
        m.init_base(atomic_tokens);
        return m;
    }

    // ---- persistence ----------------------------------------------------------
    //
    // merges file: one merge per line, "left<SP>right", in learned order.
    // vocab file: one token per line, line number == id.
    // Backslash, LF and CR inside token bytes are escaped (\\, \n, \r) so the
    // line structure survives; everything else is written raw.

    void save(const std::string& merges_path, const std::string& vocab_path) const {
        std::ofstream mf(merges_path, std::ios::binary);
        if (!mf) throw BpeIoError("cannot write " + merges_path);
        for (const auto& [l, r] : merges_) mf << escape(l) << ' ' << escape(r) << '\n';
        std::ofstream vf(vocab_path, std::ios::binary);
        if (!vf) throw BpeIoError("cannot write " + vocab_path);
        for (const std::string& tok : vocab_) vf << escape(tok) << '\n';
    }

    static BpeModel load(const std::string& merges_path, const std::string& vocab_path) {
        std::ifstream vf(vocab_path, std::ios::binary);
        if (!vf) throw BpeIoError("cannot read " + vocab_path);
        std::vector<std::string> vocab;
        std::string line;
        while (std::getline(vf, line)) vocab.push_back(unescape(line, vocab_path));

        std::ifstream mf(merges_path, std::ios::binary);
        if (!mf) throw BpeIoError("cannot read " + merges_path);
        std::vector<std::pair<std::string, std::string>> merges;
        while (std::getline(mf, line)) {
            if (line.empty()) continue;
            size_t sp = line.find(' ');
            if (sp == std::string::npos) throw BpeIoError("malformed merge line in " + merges_path);
            merges.emplace_back(unescape(line.substr(0, sp), merges_path),
                                unescape(line.substr(sp + 1), merges_path));
        }

        if (static_cast<int>(vocab.size()) < kBaseSize)
            throw BpeIoError("vocab smaller than base alphabet");
        const int n_products = static_cast<int>(merges.size());
        const int atomic_count = static_cast<int>(vocab.size()) - kBaseSize - n_products;
        if (atomic_count < 0) throw BpeIoError("vocab/merges size mismatch");

        BpeModel m;
        std::vector<std::string> atomics(vocab.begin() + kBaseSize,
                                         vocab.begin() + kBaseSize + atomic_count);
        m.init_base(atomics);
        for (int i = 0; i < kBaseSize + atomic_count; ++i) {
            if (m.vocab_[i] != vocab[i])
                throw BpeIoError("vocab entry " + std::to_string(i) + " does not match base layout");
        }
        for (const auto& [l, r] : merges) {
            auto li = m.token_to_id_.find(l);
            auto ri = m.token_to_id_.find(r);
            if (li == m.token_to_id_.end() || ri == m.token_to_id_.end())
                throw BpeIoError("merge references unknown token");
            const std::string product = l + r;
            const int expect_id = m.size();
            if (vocab[expect_id] != product)
                throw BpeIoError("vocab entry " + std::to_string(expect_id) +
                                 " does not match merge product");
            m.add_merge(li->second, ri->second, product);
        }
        return m;
    }

private:
    std::vector<std::string> vocab_;
    std::unordered_map<std::string, int> token_to_id_;
    std::vector<std::pair<std::string, std::string>> merges_;
    std::unordered_map<uint64_t, int> merge_rank_;  // (left,right) ids -> rank
    std::vector<int> merge_left_, merge_right_;
    int atomic_count_ = 0;

    static bool is_ws(char c) {
        return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
    }

    static uint64_t pair_key(int a, int b) {
        return (static_cast<uint64_t>(static_cast<uint32_t>(a)) << 32) |
               static_cast<uint32_t>(b);
    }
    static int unpack_left(uint64_t key) { return static_cast<int>(key >> 32); }
    static int unpack_right(uint64_t key) { return static_cast<int>(key & 0xffffffffu); }

    void add_token(const std::string& tok) {
        token_to_id_.emplace(tok, size());
        vocab_.push_back(tok);
    }

    int add_merge(int left, int right, const std::string& product) {
        const int rank = static_cast<int>(merges_.size());
        merge_rank_[pair_key(left, right)] = rank;
        merge_left_.push_back(left);
        merge_right_.push_back(right);
        merges_.emplace_back(vocab_[left], vocab_[right]);
        const int id = size();
        add_token(product);
        return id;
    }

    void init_base(const std::vector<std::string>& atomic_tokens) {
        vocab_.clear();
        token_to_id_.clear();
        merges_.clear();
        merge_rank_.clear();
        merge_left_.clear();
        merge_right_.clear();
        add_token("<pad>");
        add_token("<sos>");
        add_token("<eos>");
        add_token("<sep>");
        add_token("<num_>");
        add_token("<str_>");
        for (int b = 0; b < kNumBytes; ++b) add_token(std::string(1, static_cast<char>(b)));
        atomic_count_ = 0;
        for (const std::string& tok : atomic_tokens) {
            if (token_to_id_.count(tok)) continue;  // tags may be listed again
            add_token(tok);
            ++atomic_count_;
        }
    }

    static std::string escape(const std::string& raw) {
        std::string out;
        out.reserve(raw.size());
        for (char c : raw) {
            if (c == '\\') out += "\\\\";
            else if (c == '\n') out += "\\n";
            else if (c == '\r') out += "\\r";
            else out.push_back(c);
        }
        return out;
    }

    static std::string unescape(const std::string& line, const std::string& path) {
        std::string out;
        out.reserve(line.size());
        for (size_t i = 0; i < line.size(); ++i) {
            if (line[i] != '\\') {
                out.push_back(line[i]);
                continue;
            }
            if (i + 1 >= line.size()) throw BpeIoError("dangling escape in " + path);
            char c = line[++i];
            if (c == '\\') out.push_back('\\');
            else if (c == 'n') out.push_back('\n');
            else if (c == 'r') out.push_back('\r');
            else throw BpeIoError("bad escape in " + path);
        }
        return out;
    }
};

} // namespace comformer

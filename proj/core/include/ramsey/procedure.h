// Copyright 2026 The ramsey-online Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Builder strategies written as straight-line coroutines.
//
// A Procedure<T> reads the board through a const GameState and obtains
// colors with `co_await Ask(state, e, tag)`. An exposed edge resolves
// immediately from the board; an unexposed one suspends the whole
// procedure stack and surfaces as a pending QueryMove. Procedures nest with
// plain `co_await Child(...)`.
//
// Two drivers are provided: ProcedureBuilder adapts a root procedure to the
// BuilderStrategy contract, and Drive() runs a procedure directly against a
// painter (used for subroutine tests).

#ifndef RAMSEY_PROCEDURE_H_
#define RAMSEY_PROCEDURE_H_

#include <coroutine>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "ramsey/errors.h"
#include "ramsey/game.h"

namespace ramsey {

// Shared by every frame of one procedure stack.
struct ProcedureContext {
  std::optional<QueryMove> pending;
  std::coroutine_handle<> resume_point;
};

template <typename T>
class [[nodiscard]] Procedure {
 public:
  struct promise_type {
    std::optional<T> value;
    std::exception_ptr error;
    std::coroutine_handle<> continuation;
    ProcedureContext* context = nullptr;

    Procedure get_return_object() {
      return Procedure(std::coroutine_handle<promise_type>::from_promise(*this));
    }
    std::suspend_always initial_suspend() noexcept { return {}; }

    struct FinalAwaiter {
      bool await_ready() noexcept { return false; }
      std::coroutine_handle<> await_suspend(
          std::coroutine_handle<promise_type> h) noexcept {
        auto next = h.promise().continuation;
        return next ? next : std::noop_coroutine();
      }
      void await_resume() noexcept {}
    };
    FinalAwaiter final_suspend() noexcept { return {}; }

    template <typename U>
    void return_value(U&& v) {
      value.emplace(std::forward<U>(v));
    }
    void unhandled_exception() { error = std::current_exception(); }
  };

  Procedure(Procedure&& other) noexcept
      : handle_(std::exchange(other.handle_, {})) {}
  Procedure& operator=(Procedure&& other) noexcept {
    if (this != &other) {
      Reset();
      handle_ = std::exchange(other.handle_, {});
    }
    return *this;
  }
  Procedure(const Procedure&) = delete;
  Procedure& operator=(const Procedure&) = delete;
  ~Procedure() { Reset(); }

  struct Awaiter {
    std::coroutine_handle<promise_type> child;
    bool await_ready() noexcept { return false; }
    template <typename P>
    std::coroutine_handle<> await_suspend(
        std::coroutine_handle<P> parent) noexcept {
      child.promise().continuation = parent;
      child.promise().context = parent.promise().context;
      return child;
    }
    T await_resume() {
      if (child.promise().error) {
        std::rethrow_exception(child.promise().error);
      }
      return std::move(*child.promise().value);
    }
  };

  // Awaiting a child runs it to completion inside the caller's stack.
  Awaiter operator co_await() && noexcept { return Awaiter{handle_}; }

  // Root-level control, used by the drivers.
  void Start(ProcedureContext* context) {
    handle_.promise().context = context;
    context->resume_point = handle_;
  }
  bool done() const { return handle_.done(); }
  T TakeResult() {
    if (handle_.promise().error) std::rethrow_exception(handle_.promise().error);
    return std::move(*handle_.promise().value);
  }

 private:
  explicit Procedure(std::coroutine_handle<promise_type> h) : handle_(h) {}
  void Reset() {
    if (handle_) handle_.destroy();
    handle_ = {};
  }

  std::coroutine_handle<promise_type> handle_;
};

// `co_await Ask(state, e, tag)` yields the color of e, querying it through
// the driver when it is not yet exposed.
class Ask {
 public:
  Ask(const GameState& state, Edge e, std::string tag = {})
      : state_(state), edge_(e), tag_(std::move(tag)) {}

  bool await_ready() const { return state_.IsExposed(edge_); }
  template <typename P>
  void await_suspend(std::coroutine_handle<P> h) {
    ProcedureContext* ctx = h.promise().context;
    ctx->pending = QueryMove{edge_, std::move(tag_)};
    ctx->resume_point = h;
  }
  Color await_resume() const {
    const Color c = state_.ColorOf(edge_);
    RAMSEY_INVARIANT(c != kNoColor,
                     "procedure resumed before " + ToString(edge_) +
                         " was exposed");
    return c;
  }

 private:
  const GameState& state_;
  Edge edge_;
  std::string tag_;
};

// Steps a root procedure until it finishes or needs the next query.
template <typename T>
class ProcedureRunner {
 public:
  explicit ProcedureRunner(Procedure<T> proc) : proc_(std::move(proc)) {
    proc_.Start(&context_);
  }
  ProcedureRunner(const ProcedureRunner&) = delete;
  ProcedureRunner& operator=(const ProcedureRunner&) = delete;

  // Resumes as far as the board allows. Returns the pending query, or
  // nullopt when the procedure has finished.
  std::optional<QueryMove> Advance(const GameState& state) {
    for (;;) {
      if (proc_.done()) return std::nullopt;
      if (context_.pending) {
        if (!state.IsExposed(context_.pending->edge)) return context_.pending;
        context_.pending.reset();
      }
      context_.resume_point.resume();
    }
  }
  bool done() const { return proc_.done(); }
  T TakeResult() { return proc_.TakeResult(); }

 private:
  ProcedureContext context_;
  Procedure<T> proc_;
};

// Runs `proc` to completion, answering its queries with `painter`.
template <typename T>
T Drive(Procedure<T> proc, GameState& state, PainterStrategy& painter) {
  ProcedureRunner<T> runner(std::move(proc));
  while (auto q = runner.Advance(state)) {
    Query(state, q->edge, painter, q->tag);
  }
  return runner.TakeResult();
}

// BuilderStrategy over a root procedure that ends in a declaration. The
// factory is invoked on the first move with the engine's board.
class ProcedureBuilder : public BuilderStrategy {
 public:
  using Factory = std::function<Procedure<WinCertificate>(const GameState&)>;

  ProcedureBuilder(std::string name, Factory factory)
      : name_(std::move(name)), factory_(std::move(factory)) {}

  BuilderMove NextMove(const GameState& state) override {
    if (!runner_) runner_.emplace(factory_(state));
    if (auto q = runner_->Advance(state)) return *q;
    return DeclareMove{runner_->TakeResult()};
  }
  std::string Name() const override { return name_; }

 private:
  std::string name_;
  Factory factory_;
  std::optional<ProcedureRunner<WinCertificate>> runner_;
};

}  // namespace ramsey

#endif  // RAMSEY_PROCEDURE_H_

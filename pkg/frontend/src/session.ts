/**
 * Review session state machine, deliberately DOM-free so it can be driven
 * headlessly in tests and wired to any rendering layer.
 *
 * Invariants maintained here:
 * - submit is possible only when every YES_NO question is answered and, for
 *   a POSITIVE verdict, the action draft is complete;
 * - exactly one submit call reaches the server per user submit; a rejected
 *   submission clears the local verdict and action draft (answers survive,
 *   they are review signal rather than label state).
 */

import {
  Checklist,
  Question,
  RefactoringAction,
  ReviewApi,
  Sample,
  Smell,
  SubmitResult,
  Verdict,
} from './api.js';

export type SessionState =
  | 'idle'
  | 'loading'
  | 'reviewing'
  | 'submitting'
  | 'exhausted'
  | 'error';

export type LineRange = [number, number];

export class ReviewSession {
  state: SessionState = 'idle';
  lastError: string | null = null;
  sample: Sample | null = null;
  checklist: Checklist | null = null;

  verdict: Verdict | null = null;
  answers = new Map<string, boolean>();
  lineRanges: LineRange[] = [];
  members = new Set<string>();
  moveTarget: string | null = null;

  constructor(
    private readonly api: ReviewApi,
    readonly reviewerId: string,
    readonly smellFilter?: Smell,
  ) {}

  yesNoQuestions(): Question[] {
    return (this.checklist?.questions ?? []).filter((q) => q.kind === 'YES_NO');
  }

  async loadNext(): Promise<void> {
    this.state = 'loading';
    this.lastError = null;
    try {
      const res = await this.api.nextSample(this.reviewerId, this.smellFilter);
      if (res.sample === null) {
        this.sample = null;
        this.checklist = null;
        this.state = 'exhausted';
        return;
      }
      this.sample = res.sample;
      this.checklist = res.checklist;
      this.resetDrafts();
      this.state = 'reviewing';
    } catch (err) {
      // keep the current sample and drafts; the UI shows a retry banner
      this.lastError = err instanceof Error ? err.message : String(err);
      this.state = this.sample ? 'reviewing' : 'error';
    }
  }

  private resetDrafts(): void {
    this.verdict = null;
    this.answers.clear();
    this.lineRanges = [];
    this.members.clear();
    this.moveTarget = null;
  }

  answer(questionId: string, value: boolean): void {
    if (this.yesNoQuestions().some((q) => q.id === questionId)) {
      this.answers.set(questionId, value);
    }
  }

  setVerdict(v: Verdict): void {
    this.verdict = v;
  }

  /** LM: add one contiguous line range (1-based inclusive); overlapping or
   * adjacent ranges are merged. Multiple disjoint ranges are allowed. */
  selectRange(from: number, to: number): void {
    const lines = this.sample ? this.sample.code.split('\n').length : 0;
    const lo = Math.max(1, Math.min(from, to));
    const hi = Math.min(lines || Number.MAX_SAFE_INTEGER, Math.max(from, to));
    if (hi < lo) return;
    const merged: LineRange[] = [];
    let cur: LineRange = [lo, hi];
    for (const [a, b] of [...this.lineRanges].sort((x, y) => x[0] - y[0])) {
      if (b + 1 >= cur[0] && a <= cur[1] + 1) {
        cur = [Math.min(a, cur[0]), Math.max(b, cur[1])];
      } else {
        merged.push([a, b]);
      }
    }
    merged.push(cur);
    merged.sort((x, y) => x[0] - y[0]);
    this.lineRanges = merged;
  }

  clearRanges(): void {
    this.lineRanges = [];
  }

  toggleMember(name: string): void {
    if (this.members.has(name)) this.members.delete(name);
    else this.members.add(name);
  }

  pickTarget(name: string): void {
    this.moveTarget = name;
  }

  candidateTargets(): string[] {
    const raw = this.sample?.provenance['candidate_targets'];
    return Array.isArray(raw) ? (raw as string[]) : [];
  }

  actionDraft(): RefactoringAction | null {
    if (!this.sample) return null;
    switch (this.sample.smell) {
      case 'LONG_METHOD':
        if (this.lineRanges.length === 0) return null;
        return {
          kind: 'EXTRACT_LINES',
          extract_lines: this.lineRanges.map(([a, b]) => [a, b]),
          extract_members: null,
          move_target: null,
        };
      case 'LARGE_CLASS':
        if (this.members.size === 0) return null;
        return {
          kind: 'EXTRACT_MEMBERS',
          extract_lines: null,
          extract_members: [...this.members].sort(),
          move_target: null,
        };
      case 'FEATURE_ENVY':
        if (!this.moveTarget) return null;
        return {
          kind: 'MOVE_METHOD',
          extract_lines: null,
          extract_members: null,
          move_target: this.moveTarget,
        };
    }
  }

  allAnswered(): boolean {
    return this.yesNoQuestions().every((q) => this.answers.has(q.id));
  }

  canSubmit(): boolean {
    if (this.state !== 'reviewing' || !this.sample || !this.verdict) return false;
    if (!this.allAnswered()) return false;
    if (this.verdict === 'POSITIVE' && this.actionDraft() === null) return false;
    return true;
  }

  async submit(): Promise<SubmitResult> {
    if (!this.canSubmit() || !this.sample || !this.verdict) {
      return { accepted: false, reason: 'the review is incomplete' };
    }
    this.state = 'submitting';
    const result = await this.api.submitAnnotation({
      sample_id: this.sample.id,
      reviewer_id: this.reviewerId,
      verdict: this.verdict,
      answers: Object.fromEntries(this.answers),
      action: this.verdict === 'POSITIVE' ? this.actionDraft() : null,
    });
    if (result.accepted) {
      await this.loadNext();
    } else {
      // a rejected submission must leave no label state behind
      this.verdict = null;
      this.lineRanges = [];
      this.members.clear();
      this.moveTarget = null;
      this.lastError = result.reason;
      this.state = 'reviewing';
    }
    return result;
  }
}

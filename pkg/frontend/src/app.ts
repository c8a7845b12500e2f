/**
 * DOM wiring for the review app: renders the session into a root element and
 * translates clicks, drag selection, and the keyboard flow (y/n answer the
 * focused question, p/x set the verdict, Enter submits) into session calls.
 * Kept separate from the URL-driven bootstrap so tests can mount it against
 * any session.
 */

import { Verdict } from './api.js';
import { nextUnanswered, renderApp } from './render.js';
import { ReviewSession } from './session.js';

export interface MountedApp {
  session: ReviewSession;
  redraw(): void;
  /** resolves once in-flight load/submit work has settled */
  idle(): Promise<void>;
}

export function mountApp(root: HTMLElement, session: ReviewSession): MountedApp {
  let pending: Promise<unknown> = Promise.resolve();
  let dragStart: number | null = null;

  function redraw(): void {
    root.innerHTML = renderApp(session);
  }

  function track(work: Promise<unknown>): void {
    pending = work.then(redraw, redraw);
    redraw();
  }

  function lineAt(el: HTMLElement): number | null {
    const row = el.closest('[data-selectable]');
    if (!row) return null;
    const line = row.getAttribute('data-line');
    return line ? Number(line) : null;
  }

  root.addEventListener('click', (ev) => {
    const el = ev.target as HTMLElement;
    const yes = el.getAttribute('data-yes');
    const no = el.getAttribute('data-no');
    if (yes) session.answer(yes, true);
    if (no) session.answer(no, false);
    const verdict = el.getAttribute('data-verdict');
    if (verdict) session.setVerdict(verdict as Verdict);
    const member = (el.closest('[data-member]') as HTMLElement | null)?.getAttribute('data-member');
    if (member) session.toggleMember(member);
    const target = (el.closest('[data-target]') as HTMLElement | null)?.getAttribute('data-target');
    if (target) session.pickTarget(target);
    if (el.getAttribute('data-clear-ranges')) session.clearRanges();
    if (el.getAttribute('data-retry')) {
      track(session.loadNext());
      return;
    }
    if (el.getAttribute('data-submit')) {
      track(session.submit());
      return;
    }
    redraw();
  });

  root.addEventListener('mousedown', (ev) => {
    const line = lineAt(ev.target as HTMLElement);
    if (line !== null) {
      dragStart = line;
      ev.preventDefault();
    }
  });
  root.addEventListener('mouseup', (ev) => {
    const line = lineAt(ev.target as HTMLElement);
    if (dragStart !== null && line !== null) {
      session.selectRange(dragStart, line);
      redraw();
    }
    dragStart = null;
  });

  root.ownerDocument.addEventListener('keydown', (ev) => {
    if (session.state !== 'reviewing') return;
    const focus = nextUnanswered(session);
    if (ev.key === 'y' && focus) session.answer(focus, true);
    else if (ev.key === 'n' && focus) session.answer(focus, false);
    else if (ev.key === 'p') session.setVerdict('POSITIVE');
    else if (ev.key === 'x') session.setVerdict('NEGATIVE');
    else if (ev.key === 'Enter' && session.canSubmit()) {
      track(session.submit());
      return;
    } else {
      return;
    }
    redraw();
  });

  track(session.loadNext());
  return {
    session,
    redraw,
    idle: async () => {
      // settle chained work (a submit schedules a follow-up load)
      for (let i = 0; i < 4; i++) await pending;
    },
  };
}

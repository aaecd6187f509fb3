// Current-page view: categories, decision, per-URL next-visit buttons,
// recategorization, and the third-party list with tracker/blocked badges.
// Every badge and verdict shown is an API field verbatim.

import { ApiClient, CurrentPage } from './api';
import { clear, el, toast } from './dom';

export class PagePopup {
  private page: CurrentPage | null = null;
  private nextVisit: 'block' | 'allow' | null = null;
  private taxonomy: string[] = [];

  constructor(
    private readonly api: ApiClient,
    private readonly root: HTMLElement,
    private readonly clientId: string,
  ) {}

  async refresh(): Promise<void> {
    try {
      const taxonomy = await this.api.taxonomy();
      this.taxonomy = taxonomy.topCategories;
      this.page = await this.api.currentPage(this.clientId);
      try {
        this.nextVisit = (await this.api.urlPolicy(this.page.url)).verdict;
      } catch {
        this.nextVisit = null; // no per-URL policy recorded yet
      }
    } catch {
      this.page = null;
    }
    this.render();
  }

  render(): void {
    clear(this.root);
    if (!this.page) {
      this.root.append(el('p', { class: 'empty-state' }, [
        'No page seen for this client yet. Browse through the proxy first.',
      ]));
      return;
    }
    const page = this.page;
    this.root.append(el('p', { class: 'page-url' }, [page.url]));

    const verdict = el('span', { class: `badge badge-${page.verdict}`, id: 'verdict' },
                       [page.verdict]);
    const line = el('p', {}, ['Decision: ', verdict, ` (${page.reason})`]);
    this.root.append(line);

    const chips = el('p', { id: 'categories' });
    for (const category of page.categories) {
      chips.append(el('span', { class: 'chip' }, [category]));
    }
    chips.append(el('span', { class: 'source' }, [`via ${page.source}`]));
    this.root.append(chips);

    const nextVisitLabel = this.nextVisit === null ? 'category policy' : this.nextVisit;
    this.root.append(el('p', { id: 'next-visit' }, [`Next visit: ${nextVisitLabel}`]));

    const blockBtn = el('button', { id: 'block-next' }, ['Block trackers next time']);
    blockBtn.addEventListener('click', () => void this.setNextVisit('block'));
    const allowBtn = el('button', { id: 'allow-next' }, ['Allow trackers next time']);
    allowBtn.addEventListener('click', () => void this.setNextVisit('allow'));
    this.root.append(el('div', { class: 'row' }, [blockBtn, allowBtn]));

    this.root.append(this.recategorizeControls(page));
    this.root.append(this.thirdPartyTable(page));

    const broken = el('button', { id: 'report-broken' }, ['Report broken page']);
    broken.addEventListener('click', () => void this.reportBroken(page.url));
    this.root.append(broken);
  }

  private recategorizeControls(page: CurrentPage): HTMLElement {
    const select = el('select', { id: 'recategorize-select', multiple: '' });
    for (const category of this.taxonomy) {
      const option = el('option', { value: category }, [category]);
      option.selected = page.categories.includes(category);
      select.append(option);
    }
    const apply = el('button', { id: 'recategorize-apply' }, ['Recategorize']);
    apply.addEventListener('click', () => void this.recategorize(page.url, select));
    return el('div', { class: 'recategorize' }, [
      el('p', { class: 'hint' }, ['Wrong categories? Pick up to 3:']),
      select, apply,
    ]);
  }

  private thirdPartyTable(page: CurrentPage): HTMLElement {
    const table = el('table', { id: 'third-parties' });
    table.append(el('tr', {}, [
      el('th', {}, ['third-party domain']),
      el('th', {}, ['tracker']),
      el('th', {}, ['blocked']),
    ]));
    for (const tp of page.thirdParties) {
      table.append(el('tr', {}, [
        el('td', {}, [tp.domain]),
        el('td', {}, [tp.isTracker
          ? el('span', { class: 'badge badge-tracker' }, ['tracker']) : '-']),
        el('td', {}, [tp.blocked
          ? el('span', { class: 'badge badge-block' }, ['blocked']) : '-']),
      ]));
    }
    return table;
  }

  async setNextVisit(verdict: 'block' | 'allow'): Promise<void> {
    if (!this.page) {
      return;
    }
    try {
      const confirmed = await this.api.setUrlPolicy(this.page.url, verdict);
      this.nextVisit = confirmed.verdict;
      toast(`Next visit to this page: ${confirmed.verdict}`);
    } catch (err) {
      toast(`Could not set per-URL policy: ${err}`, 'error');
    }
    this.render();
  }

  async recategorize(url: string, select: HTMLSelectElement): Promise<void> {
    const chosen = [...select.selectedOptions].map((o) => o.value);
    try {
      await this.api.recategorize(url, chosen);
      toast('Recategorized; takes effect immediately');
      await this.refresh();
    } catch (err) {
      toast(`Recategorize failed: ${err}`, 'error');
    }
  }

  async reportBroken(url: string): Promise<void> {
    try {
      await this.api.reportBrokenPage(url, 'reported from console');
      toast('Reported for allowlist review');
    } catch (err) {
      toast(`Report failed: ${err}`, 'error');
    }
  }
}

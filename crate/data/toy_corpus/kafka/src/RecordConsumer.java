/*
 * Licensed to the Apache Software Foundation (ASF) under one
 * or more contributor license agreements. Version 2.0 of the License.
 */
package org.apache.kafka.record;

import java.util.List;
import java.util.ArrayList;
import java.util.Map;
import java.util.HashMap;
import org.apache.kafka.service.ProducerManager;
import org.apache.kafka.service.TopicManager;

/**
 * Manages RecordConsumer instances for the kafka service.
 */
public class RecordConsumer {
    private static final Logger LOG = LoggerFactory.getLogger(RecordConsumer.class);
    private int consumerId = 0;
    private long consumerCount = 0L;
    private int recordSize = 0;
    private long topicSize = 0L;

    public RecordConsumer() {
    }

    public int getConsumerId() {
        return consumerId;
    }

    public void setConsumerId(int consumerId) {
        this.consumerId = consumerId;
    }

    public long getConsumerCount() {
        return consumerCount;
    }

    public void setConsumerCount(long consumerCount) {
        this.consumerCount = consumerCount;
    }

    public int getRecordSize() {
        return recordSize;
    }

    public void setRecordSize(int recordSize) {
        this.recordSize = recordSize;
    }

    public long getTopicSize() {
        return topicSize;
    }

    public void setTopicSize(long topicSize) {
        this.topicSize = topicSize;
    }

    // check all topic entries
    public List<RecordConsumer> checkTopicEntries(Map<String, RecordConsumer> topicMap) {
        StringBuilder result = new StringBuilder();
        List<RecordConsumer> producerEntries = new ArrayList<>();
        for (RecordConsumer entry : producerEntries) {
            result.append(entry.getTopicSize());
        }
        LOG.debug("processing RecordConsumer " + topicSize);
        this.consumerCount = consumerCount; // TODO: revisit this
        return producerEntries;
    }

    // remove all producer entries
    public List<RecordConsumer> removeProducerEntries(Map<String, RecordConsumer> producerMap) {
        StringBuilder result = new StringBuilder();
        List<RecordConsumer> partitionEntries = new ArrayList<>();
        int builder = partitionEntries.size();
        partitionEntries.add(createConsumer(recordSize));
        int count = partitionEntries.size();
        int value = partitionEntries.size();
        for (RecordConsumer entry : partitionEntries) {
            result.append(entry.getConsumerId());
        }
        partitionEntries.add(createTopic(recordSize));
        LOG.debug("processing RecordConsumer " + recordSize);
        return partitionEntries;
    }

    @Override
    public String toString() {
        return "RecordConsumer";
    }
}
